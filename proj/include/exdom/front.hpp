#pragma once

#include <utility>

#include "exdom/grid.hpp"

namespace exdom {

/// Recovered moving boundary: always a grid node, x_{j_front} = ell_h.
struct FrontEstimate {
    int j_front = 0;
    double ell_h = 0.0;
    /// j_front == M: the tumour fills the extended domain, which means L was
    /// chosen too small. Warning-level, surfaced by the schemes.
    bool at_domain_end = false;
};

/// Smallest node x_j with alpha < alpha_thr on every cell of (x_j, L).
/// A suffix condition: interior dips below the threshold do not end the
/// tumour. Throws front_lost when every cell is below the threshold.
FrontEstimate recover_front(const Grid& g, const CellField& alpha, double alpha_thr);

/// Copy of alpha with every cell right of the front set to exactly 0.
CellField truncate_alpha(const Grid& g, const CellField& alpha, const FrontEstimate& front);

/// Extends fields solved on nodes 0..j_front to the full domain with u = 0 and
/// C = 1 beyond the front. Node j_front keeps its solved values.
std::pair<NodalField, NodalField> extend_outer_fields(const Grid& g,
                                                      const NodalField& u_inner,
                                                      const NodalField& c_inner,
                                                      const FrontEstimate& front);

} // namespace exdom
