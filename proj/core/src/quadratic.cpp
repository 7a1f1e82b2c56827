#include "extising/quadratic.hpp"

namespace extising {

QuadraticForm build_quadratic_form(const ModelParams& params, const CouplingTable& couplings) {
    params.validate();
    if (couplings.z() > params.n - 1)
        throw DomainError("build_quadratic_form: coupling range exceeds n-1");

    const int n = params.n;
    QuadraticForm qf;
    qf.a_mat = Eigen::MatrixXd::Zero(n, n);
    qf.b_mat = Eigen::MatrixXd::Zero(n, n);
    qf.a_mat.diagonal().setConstant(-params.h);

    for (int r = 1; r <= couplings.z(); ++r) {
        const double jr = couplings.j[r - 1];
        for (int i = 0; i + r < n; ++i) {
            qf.a_mat(i, i + r) = jr;
            qf.a_mat(i + r, i) = jr;
            qf.b_mat(i, i + r) = jr;
            qf.b_mat(i + r, i) = -jr;
        }
    }
    return qf;
}

QuadraticForm build_quadratic_form(const ModelParams& params) {
    return build_quadratic_form(params, build_couplings(params));
}

} // namespace extising
