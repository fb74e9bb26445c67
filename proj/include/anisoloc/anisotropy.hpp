#pragma once

#include <Eigen/Dense>

namespace anisoloc {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

// Symmetric positive definite H = P^T P with P upper triangular, P11 > 0, P22 > 0.
// Q = P^{-1}. The transformed coordinates are y = P x and nu = Q^T omega.
class AnisotropySpec {
public:
    AnisotropySpec();  // identity
    static AnisotropySpec from_H(const Mat2& H);
    static AnisotropySpec from_P(const Mat2& P);
    static AnisotropySpec from_entries(double h11, double h12, double h22);
    static AnisotropySpec from_p_entries(double p11, double p12, double p22);

    const Mat2& H() const { return H_; }
    const Mat2& P() const { return P_; }
    const Mat2& Q() const { return Q_; }
    double detP() const { return P_(0, 0) * P_(1, 1); }

private:
    Mat2 H_, P_, Q_;
};

struct Decomposition {
    Mat2 P;
    Mat2 Q;
};

// Cholesky-type factorisation H = P^T P with P upper triangular.
Decomposition decompose(const Mat2& H);

struct TransformedPoint {
    Vec2 y;
    Vec2 nu;
};

TransformedPoint to_transformed(const AnisotropySpec& spec, const Vec2& x, const Vec2& omega);

// r_theta = [[cos, -sin], [sin, cos]].
Mat2 rotation(double theta);

// r~_{-theta,H} = Q r_{-theta} P. Unit determinant; reduces to r_{-theta} at H = I.
Mat2 transformed_rotation(const AnisotropySpec& spec, double theta);

}  // namespace anisoloc
