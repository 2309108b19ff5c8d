use super::{Algebra, AlgebraError, PresentedAlgebra};
use crate::linalg::{kernel, MatrixE, Subspace, Vector};
use crate::scalars::Scalar;

/// Linear map given by its matrix from source to target coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMapE {
    pub matrix: MatrixE,
}

impl LinearMapE {
    pub fn new(matrix: MatrixE) -> Self {
        Self { matrix }
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector, AlgebraError> {
        Ok(self.matrix.mul_vec(v)?)
    }

    pub fn kernel(&self) -> Subspace {
        kernel(&self.matrix)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target_dim()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source_dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Checks `f(b_i b_j) = f(b_i) f(b_j)` on all basis pairs of `src`.
    pub fn is_multiplicative(&self, src: &Algebra, dst: &Algebra) -> Result<bool, AlgebraError> {
        for i in 0..src.dim() {
            for j in 0..=i {
                let lhs = self.apply(src.basis_product(i, j))?;
                let rhs = dst.multiply(&self.apply(&src.basis_vector(i))?, &self.apply(&src.basis_vector(j))?)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// The unique homomorphism `src -> dst` sending the generators to `images`.
///
/// Words in the generators are multiplied breadth-first, tracking each word
/// together with its forced image. The span of these pairs is the graph of
/// the map; a graph vector with zero source part and nonzero target part is a
/// contradiction.
pub fn find_homomorphism(
    src: &PresentedAlgebra,
    dst: &Algebra,
    images: &[Vector],
) -> Result<LinearMapE, AlgebraError> {
    let a = &src.algebra;
    let (n, m) = (a.dim(), dst.dim());
    if images.len() != src.generators.len() {
        return Err(AlgebraError::DimensionMismatch { expected: src.generators.len(), found: images.len() });
    }
    for img in images {
        if img.len() != m {
            return Err(AlgebraError::DimensionMismatch { expected: m, found: img.len() });
        }
    }
    let field = a.field();
    let join = |x: &[Scalar], y: &[Scalar]| -> Vector { x.iter().chain(y).cloned().collect() };
    let seeds: Vec<Vector> = src.generators.iter().zip(images).map(|(g, h)| join(g, h)).collect();
    let mut graph = Subspace::span(field, n + m, &seeds)?;
    loop {
        if graph.pivots().iter().any(|&p| p >= n) {
            return Err(AlgebraError::Inconsistent(
                "a linear relation among words is not respected by the images".into(),
            ));
        }
        let basis = graph.basis().to_vec();
        let mut new = Vec::new();
        for i in 0..basis.len() {
            for j in 0..=i {
                let (xs, xt) = basis[i].split_at(n);
                let (ys, yt) = basis[j].split_at(n);
                let w = join(&a.multiply(xs, ys)?, &dst.multiply(xt, yt)?);
                if !graph.contains(&w) {
                    new.push(w);
                }
            }
        }
        if new.is_empty() {
            break;
        }
        graph = graph.extend(&new)?;
    }
    if graph.dim() < n {
        return Err(AlgebraError::NotGenerating { closure: graph.dim(), dim: n });
    }
    // Pivots are exactly 0..n, so row i reads (e_i, f(e_i)).
    let columns: Vec<Vector> = graph.basis().iter().map(|row| row[n..].to_vec()).collect();
    let map = LinearMapE::new(MatrixE::from_columns(field, m, &columns)?);
    if !map.is_multiplicative(a, dst)? {
        return Err(AlgebraError::Inconsistent("map is not multiplicative".into()));
    }
    for (g, h) in src.generators.iter().zip(images) {
        if map.apply(g)? != *h {
            return Err(AlgebraError::Inconsistent("generator image not preserved".into()));
        }
    }
    Ok(map)
}
