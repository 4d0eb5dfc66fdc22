#pragma once

#include "fim/module.hpp"

#include <utility>
#include <vector>

namespace fim {

/// Sorted 0-based coordinate list.
using CoordSet = std::vector<int>;

CoordSet complement(const CoordSet& s, int m);
CoordSet all_coords(int m);
/// Throws unless `s` is a nonempty sorted list of distinct coordinates in [0, m).
void check_coord_set(const CoordSet& s, int m);
/// Object with 1 in the coordinates of `s`.
ObjectIndex indicator(const CoordSet& s, int m);
/// Object with `s_part` on the coordinates `s` and `t_part` on the rest.
ObjectIndex combine(const ObjectIndex& s_part, const CoordSet& s, const ObjectIndex& t_part);

/// (Sigma_i V)(n) = V(n + o_i); the window shrinks by one in coordinate i.
TruncatedModule shift(const TruncatedModule& v, int i);
/// V -> Sigma_i V, with V restricted to the window of the shift.
ModuleMap canonical_map(const ModulePtr& v, int i);
TruncatedModule kernel_functor(const TruncatedModule& v, int i);
TruncatedModule derivative(const TruncatedModule& v, int i);

/// (prod_{i in S} Sigma_i)^n V, shifting in ascending coordinate order.
TruncatedModule shift_prod(const TruncatedModule& v, const CoordSet& s, int n);
/// Composite of canonical maps V -> shift_prod(V, S, n), with V restricted to its window.
ModuleMap canonical_prod_map(const ModulePtr& v, const CoordSet& s, int n);
/// Direct sums over i in S, all restricted to the common window bound - 1_S.
TruncatedModule shift_sum(const TruncatedModule& v, const CoordSet& s);
TruncatedModule kernel_sum(const TruncatedModule& v, const CoordSet& s);
TruncatedModule derivative_sum(const TruncatedModule& v, const CoordSet& s);

/// F_s(W) = (M(s) boxtimes kC^{not S}_G) tensored over R_s with W. W lives on the
/// coordinates complement(S) with group product(Aut(s), G) and window bound.project(not S).
/// Basis at n: order-preserving injections s -> n_S (lexicographic, coordinate order of S)
/// times the basis of W(n_{not S}).
TruncatedModule induced_module(const ObjectIndex& s, const CoordSet& coords, const TruncatedModule& w,
                               const GroupPtr& group, const ObjectIndex& bound);

/// Tuples of order-preserving injections s_q -> (n_S)_q in the basis order of induced_module.
std::vector<std::vector<Injection>> induced_combinations(const ObjectIndex& s, const ObjectIndex& n_s);

/// W' boxtimes kAut(s): group product(Aut(s), G) where Aut(s) acts on the regular factor.
/// Basis w' (x) sigma has index i_w * |Aut(s)| + sigma.
TruncatedModule tensor_regular(const TruncatedModule& w, const ObjectIndex& s);

/// Matrix of the left regular representation of `element`.
Matrix regular_matrix(const GroupTable& group, int element);

/// phi: V -> Ind Res V and eps: Ind Res V -> V with eps phi = id.
std::pair<ModuleMap, ModuleMap> averaging_splitting(const ModulePtr& v);

/// theta: Hom(Ind V, W) -> Hom(V, Res W), phi |-> (v |-> phi(v (x) 1)).
ModuleMap adjunction_restrict(const ModuleMap& phi, const ModulePtr& v, const ModulePtr& res_w);

}  // namespace fim
