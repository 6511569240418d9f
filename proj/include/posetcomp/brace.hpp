#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posetcomp/hochschild.hpp"

namespace posetcomp {

/// Hochschild braces x{x_1..x_n}(a_1..a_m): each x_k is fed a_{i_k+1}..a_{i_k+|x_k|}
/// and the result is passed to x, with sign (-1)^{sum_k i_k (|x_k| - 1)}.
/// Computed by evaluating on basis tensors. Empty argument list returns x.
RelCochain hoch_brace(const RelCochain& x, const std::vector<RelCochain>& xs);

/// Sign rule of the simplicial diagonal Delta_{1,r}.
enum class DeltaSign {
    printed,      ///< (-1)^{sum_k (b_k - b'_k) b'_k}
    desuspended,  ///< (-1)^{sum_k (b_k - b'_k - 1) b'_k}; matches the Hochschild brace sign
};

const char* to_string(DeltaSign s);
DeltaSign parse_delta_sign(const std::string& text);

struct DeltaTerm {
    int sign = 1;
    std::vector<std::pair<int, int>> cuts;  ///< (b'_k, b_k)
    Chain outer;
    std::vector<Chain> segments;
};

/// Terms of Delta_{1,r}(c) over 0 <= b'_1 <= b_1 <= .. <= b'_r <= b_r <= n.
/// Degenerate outer chains are kept.
std::vector<DeltaTerm> simp_delta_1r(const Chain& c, int r, DeltaSign rule = DeltaSign::printed);

/// Dual of Delta_{1,r}: (f{f_1..f_r})(c) = sum over terms of sign * f(outer) * prod f_k(segment_k).
Cochain simp_brace(const Cochain& f, const std::vector<Cochain>& fs, DeltaSign rule = DeltaSign::printed);

/// DGA operations entering the brace identities:
///   x . y = (-1)^{|x||y|} x cup y  and  d x = (-1)^{|x|+1} delta x.
Cochain bdga_product(const Cochain& x, const Cochain& y);
Cochain bdga_differential(const Cochain& x);
RelCochain bdga_product(const RelCochain& x, const RelCochain& y);
RelCochain bdga_differential(const RelCochain& x);

/// Brace, product and differential of one cochain flavor.
template <class V>
struct BraceStructure {
    std::function<V(const V&, const std::vector<V>&)> brace;
    std::function<V(const V&, const V&)> product;
    std::function<V(const V&)> differential;
};

BraceStructure<RelCochain> hochschild_structure();
BraceStructure<Cochain> simplicial_structure(DeltaSign rule = DeltaSign::printed);

/// (v{v_1..v_m}){w_1..w_n} minus the signed sum of nested insertions.
template <class V>
V check_brace_relation(const BraceStructure<V>& s, const V& v, const std::vector<V>& vs, const std::vector<V>& ws);

/// (v.w){v_1..v_n} minus sum_k (-1)^{|w| sum_{p<=k}(|v_p|-1)} v{v_1..v_k} . w{v_{k+1}..v_n}.
template <class V>
V check_distributivity(const BraceStructure<V>& s, const V& v, const V& w, const std::vector<V>& vs);

/// Left side minus right side of the boundary relation (n >= 1 arguments).
template <class V>
V check_boundary_relation(const BraceStructure<V>& s, const V& v, const std::vector<V>& vs);

/// Residual iota(f{f_1..f_k}) - iota(f){iota(f_1)..iota(f_k)}.
RelCochain iota_brace_residual(const Cochain& f, const std::vector<Cochain>& fs, DeltaSign rule = DeltaSign::printed);

/// Smallest degree pattern on which iota fails to commute with braces.
struct BraceDiscrepancy {
    bool found = false;
    std::vector<int> degrees;  ///< |f|, |f_1|, .., |f_k|
    std::vector<Chain> inputs;
    Chain at;                  ///< output basis chain where the two sides differ
    Scalar simplicial_value;   ///< coefficient of iota(f{..}) at `at`
    Scalar hochschild_value;   ///< coefficient of iota(f){..} at `at`
    /// Across every basis instance with these degrees, the two sides differ
    /// exactly by (-1)^{sum_k b'_k}, b'_k the start of the k-th inserted segment.
    bool explained_by_position_parity = false;
    std::size_t instances_checked = 0;
};

/// Exhaustive search over basis cochains, patterns ordered by total degree.
BraceDiscrepancy localize_brace_discrepancy(const NervePtr& nerve, int max_degree, int max_args,
                                            DeltaSign rule = DeltaSign::printed);

}  // namespace posetcomp
