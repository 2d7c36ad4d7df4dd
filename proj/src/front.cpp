#include "exdom/front.hpp"

#include "exdom/errors.hpp"

namespace exdom {

FrontEstimate recover_front(const Grid& g, const CellField& alpha, double alpha_thr) {
    if (!(alpha_thr > 0.0 && alpha_thr < 1.0))
        fail(ErrorCategory::config, "alpha_thr must lie in (0, 1)");
    const int m = g.num_cells();
    if (static_cast<int>(alpha.size()) != m)
        fail(ErrorCategory::config, "cell field size does not match grid");

    int last = -1; // last cell still at or above the threshold
    for (int i = m - 1; i >= 0; --i) {
        if (alpha[i] >= alpha_thr) {
            last = i;
            break;
        }
    }
    if (last < 0)
        fail(ErrorCategory::front_lost, "every cell is below alpha_thr; tumour lost");

    FrontEstimate fr;
    fr.j_front = last + 1;
    fr.ell_h = g.node(fr.j_front);
    fr.at_domain_end = fr.j_front == m;
    return fr;
}

CellField truncate_alpha(const Grid& g, const CellField& alpha, const FrontEstimate& front) {
    CellField out = alpha;
    for (int i = front.j_front; i < g.num_cells(); ++i) out[i] = 0.0;
    return out;
}

std::pair<NodalField, NodalField> extend_outer_fields(const Grid& g,
                                                      const NodalField& u_inner,
                                                      const NodalField& c_inner,
                                                      const FrontEstimate& front) {
    const int n_inner = front.j_front + 1;
    if (static_cast<int>(u_inner.size()) < n_inner || static_cast<int>(c_inner.size()) < n_inner)
        fail(ErrorCategory::config, "inner fields do not cover the truncated mesh");

    NodalField u(g.num_nodes(), 0.0);
    NodalField c(g.num_nodes(), 1.0);
    for (int i = 0; i < n_inner; ++i) {
        u[i] = u_inner[i];
        c[i] = c_inner[i];
    }
    return {std::move(u), std::move(c)};
}

} // namespace exdom
