package algebra;

interface VectorSpace     <Vector<Scalar>>
    extends AdditiveGroup <Vector<Scalar>>,
            Field                <Scalar> {

    Vector<Scalar> timesScalar(Scalar s);

}
