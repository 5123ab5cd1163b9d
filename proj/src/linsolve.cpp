#include "linsolve.hpp"

#include <Eigen/LU>

namespace pipeflow {

DenseSolution solve_dense(const CMat& A, const CVec& b) {
    const int n = static_cast<int>(A.rows());
    require(A.cols() == n && b.size() == n, ErrorKind::Input, "dense solve shape mismatch");

    Vec scale(n);
    for (int i = 0; i < n; ++i) {
        double s = A.row(i).cwiseAbs().maxCoeff();
        require(s > 0.0, ErrorKind::Numeric, "singular collocation matrix: zero row ", i);
        scale[i] = 1.0 / s;
    }
    CMat As = scale.asDiagonal() * A;
    CVec bs = scale.asDiagonal() * b;

    Eigen::PartialPivLU<CMat> lu(As);
    DenseSolution out;
    out.rcond_estimate = lu.rcond();
    require(std::isfinite(out.rcond_estimate) && out.rcond_estimate > 1e-18, ErrorKind::Numeric,
            "collocation matrix numerically singular (rcond ", out.rcond_estimate, ")");

    CVec x = lu.solve(bs);
    for (int pass = 0; pass < 2; ++pass) {
        CVec r = bs - As * x;
        x += lu.solve(r);
    }
    require(x.allFinite(), ErrorKind::Numeric, "dense solve produced non-finite values");
    out.x = std::move(x);
    return out;
}

}  // namespace pipeflow
