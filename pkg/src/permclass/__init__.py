"""Exact enumeration toolkit for subclasses of the separable permutations."""

from .perms import (
    Perm,
    avoids,
    avoids_all,
    closure,
    complement,
    contains,
    decreasing_perm,
    delete_point,
    direct_sum,
    format_perm,
    increasing_perm,
    inverse,
    is_decreasing,
    is_increasing,
    is_skew_decomposable,
    is_sum_decomposable,
    parse_perm,
    perm,
    reverse,
    skew_components,
    skew_sum,
    standardize,
    sum_components,
)
from .septree import (
    SEPARABLE_BASIS,
    SepTree,
    X_BASIS,
    build_tree,
    inflate,
    is_in_x,
    is_in_x_inflation,
    is_separable,
    tree_from_text,
    tree_to_perm,
    tree_to_text,
)
from .uclass import USpec
from .counting import (
    ClassSpec,
    CountTable,
    MemberLimitError,
    enumerate_av,
    enumerate_xu,
)
from .ratfun import (
    Poly,
    PowerSeries,
    RationalFunction,
    series_expand,
    solve_fixed_point_series,
    solve_linear_system,
)
from .engine import (
    ProfileLimitError,
    ProfileSystem,
    PropertySet,
    SKEW_BIT,
    SUM_BIT,
    build_profile_system,
    class_gf,
    indecomposable_gfs,
    u_profile_gfs,
    x_inflation_gf,
)

__version__ = "0.1.0"
