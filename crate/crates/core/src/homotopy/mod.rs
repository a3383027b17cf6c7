//! Elementary homotopies and subdivided paths, the path-of-paths
//! transformation, tensor algebras and classifying maps, fiber products and
//! path rings, the `q`/`Q` idempotent calculus, graded homotopies and maps
//! attached to amalgamated products.

mod amalgam;
mod elementary;
mod eta;
mod fiber;
mod graded;
mod path;
mod qq;
mod tensor;

pub use amalgam::{diagonal_amalgam, idempotent_square_zero_amalgam, Amalgam, AmalgamError, AmalgamReport, PresentedMap};
pub use elementary::{check_elementary, Coordinates, ElementaryHomotopy, EndpointVerdict};
pub use eta::{corner_value, eta_family, eta_transformation, interval_samples, printed_family, EtaFamily, EtaReport, SquareImage, SquareSource};
pub use fiber::{fiber_product, path_algebra, FiberProduct, Pair, PathAlgebra};
pub use graded::{check_graded, degree_zero_projection, graded_homotopy, orthogonal_sum, polynomial_example, square_zero_example, GradedReport, OrthogonalityReport};
pub use path::{interval_walk, IntervalWalk, PathError, SubdividedPath};
pub use qq::{alternating_words, q_generators, qq_calculus, ConjugationWitness, CriticalPair, FormalClass, IdempotentPair, QElem, QqError, QqReport, RewriteSystem, TildeMatrix, ZTilde};
pub use tensor::{loop_extension, loop_naturality, loop_rho, show_tensor, tensor_algebra, ClassifyingMap, Extension, ExtensionInput, RingElem, RingInput, StructureRing, TensorElem, TruncatedTensorAlgebra};
