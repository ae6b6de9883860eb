"""Torsion-free subgroups of Coxeter groups through Weyl root lattices
over F2, with exact hyperbolic volumes in dimensions 4, 6 and 8.
"""

from .symbols import (
    INF,
    CoxeterSymbol,
    FiniteType,
    SymbolError,
    bilinear_gram,
    classify_finite_type,
    connected_components,
    euler_characteristic,
    finite_order,
    induced_subsymbol,
    parity_character,
    parse_symbol,
    serialize_symbol,
    signature,
)
from .weyl import (
    WeylData,
    WeylError,
    cartan_matrix,
    coxeter_element,
    element_order,
    longest_element,
    longest_word,
    perm_model,
    reflection_matrix,
    verify_exponents,
    weyl_data,
    word_to_matrix,
)
from .modtwo import (
    F2Subspace,
    ModTwoError,
    WeightVector,
    admissible_nodes,
    alpha_map,
    dpsi,
    find_target,
    involution_ker_im,
    is_admissible,
    is_independent_for,
    is_specially_admissible,
    lambda_dim,
    orbit_span,
    reduce_mod2,
    weight_vector,
    x_set,
)
from .involutions import (
    EquivalenceClass,
    InvolutionError,
    elementary_moves,
    equivalence_classes,
    half_coxeter_check,
    is_minus_one_type,
    maximal_rank_class,
    pi_permutation,
)
from .torsionfree import (
    Certificate,
    CyclicExtension,
    DaggerError,
    DaggerSymbol,
    SemidirectElement,
    TorsionWitness,
    build_dagger,
    certify_torsion_free,
    cyclic_extension,
    enumerate_image,
    eps,
    faithful_on_Bk,
    kernel_index,
    naive_phi,
    phi,
    replay_certificate,
    torsion_witnesses,
    verify_relations,
)
from .geometry import (
    GeometryError,
    PiMonomial,
    bernoulli,
    covolume_gauss_bonnet,
    covolume_siegel,
    kappa,
    manifold_volume,
    vinberg_symbol,
)

__version__ = "0.1.0"
