#include "majorana/commutant.hpp"

#include <Eigen/Dense>

namespace majorana {

namespace {

int null_dimension(const Eigen::MatrixXd& a, double rel_cutoff) {
    const int cols = static_cast<int>(a.cols());
    if (a.rows() == 0) return cols;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& s = svd.singularValues();
    const double smax = s.size() ? s.maxCoeff() : 0.0;
    int rank = 0;
    for (int i = 0; i < s.size(); ++i)
        if (smax > 0.0 && s[i] > rel_cutoff * smax) ++rank;
    return cols - rank;
}

}  // namespace

CommutantDims commutant_certificate(const std::vector<RealMatrix4>& generators, double rel_cutoff) {
    // Row (g, r, c) of K holds the coefficients of (XG - GX)_{rc} in the 16
    // unknowns X_{ab}, index a*4+b.
    const int nrows = 16 * static_cast<int>(generators.size());
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(nrows, 16);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        const RealMatrix4& G = generators[g];
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                const int row = static_cast<int>(g) * 16 + r * 4 + c;
                for (int j = 0; j < 4; ++j) {
                    k(row, r * 4 + j) += G(j, c);
                    k(row, j * 4 + c) -= G(r, j);
                }
            }
    }

    // Basis of symmetric matrices: E_aa and E_ab + E_ba.
    Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(16, 10);
    int col = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b, ++col) {
            sym(a * 4 + b, col) = 1.0;
            sym(b * 4 + a, col) = 1.0;
        }

    CommutantDims d;
    d.dim_commutant = null_dimension(k, rel_cutoff);
    d.dim_symmetric_commutant = null_dimension(k * sym, rel_cutoff);
    return d;
}

}  // namespace majorana
