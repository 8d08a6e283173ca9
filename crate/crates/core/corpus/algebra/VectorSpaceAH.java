package algebra;

interface VectorSpaceAH   <Vector, Scalar>
    extends AdditiveGroup <Vector>,
            Field         <Scalar> {

    Vector timesScalar (Scalar s);

}
