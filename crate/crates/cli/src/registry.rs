//! Built-in fixture documents addressable without files.

use triplekit::doc::{Document, LieAlgebraDoc, LieRepresentationDoc, MatrixDoc};
use triplekit::exactla::Scalar;
use triplekit::fixtures;

/// Resolves `paper/dim2`, `paper/dim4`, `lie/heisenberg`, `lie/sl2`,
/// `lie/solvable3`.
pub fn builtin(name: &str) -> Option<Document> {
    match name {
        "paper/dim2" => {
            let pair = fixtures::pair_dim2();
            let mut doc = Document::from_lts_pair(&pair);
            doc.operator = Some(MatrixDoc::from_matrix(
                &fixtures::rb_dim2(Scalar::one(), Scalar::from_int(2)),
            ));
            Some(doc)
        }
        "paper/dim4" => {
            let pair = fixtures::pair_dim4();
            let mut doc = Document::from_lts_pair(&pair);
            doc.operator = Some(MatrixDoc::from_matrix(fixtures::oper_dim4().matrix()));
            Some(doc)
        }
        "lie/heisenberg" => {
            let pair = fixtures::lie_adjoint_pair(fixtures::lie_heisenberg());
            Some(Document {
                lie_algebra: Some(LieAlgebraDoc::from_lie(pair.algebra())),
                lie_representation: Some(LieRepresentationDoc::from_rep(pair.rep())),
                operator: Some(MatrixDoc::from_matrix(&fixtures::lie_operator_heisenberg())),
                ..Document::default()
            })
        }
        "lie/sl2" => {
            let pair = fixtures::lie_sl2_natural();
            Some(Document {
                lie_algebra: Some(LieAlgebraDoc::from_lie(pair.algebra())),
                lie_representation: Some(LieRepresentationDoc::from_rep(pair.rep())),
                operator: Some(MatrixDoc::from_matrix(&fixtures::lie_operator_sl2_natural())),
                ..Document::default()
            })
        }
        "lie/solvable3" => {
            let pair = fixtures::lie_adjoint_pair(fixtures::lie_solvable3());
            Some(Document {
                lie_algebra: Some(LieAlgebraDoc::from_lie(pair.algebra())),
                lie_representation: Some(LieRepresentationDoc::from_rep(pair.rep())),
                ..Document::default()
            })
        }
        _ => None,
    }
}

/// All registry names, for help text and tests.
#[allow(dead_code)]
pub fn names() -> &'static [&'static str] {
    &[
        "paper/dim2",
        "paper/dim4",
        "lie/heisenberg",
        "lie/sl2",
        "lie/solvable3",
    ]
}
