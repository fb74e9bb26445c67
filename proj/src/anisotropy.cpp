#include "anisoloc/anisotropy.hpp"

#include <cmath>
#include <sstream>

#include "anisoloc/errors.hpp"

namespace anisoloc {

namespace {

void require_finite(const Mat2& m, const char* what) {
    if (!m.allFinite()) throw DomainError(std::string(what) + ": entries must be finite");
}

}  // namespace

Decomposition decompose(const Mat2& H) {
    require_finite(H, "decompose");
    const double scale = H.cwiseAbs().maxCoeff();
    if (std::fabs(H(0, 1) - H(1, 0)) > 1e-14 * std::max(scale, 1.0))
        throw DomainError("decompose: H is not symmetric");
    const double t = 0.5 * (H(0, 0) + H(1, 1));
    const double d = H(0, 0) * H(1, 1) - H(0, 1) * H(0, 1);
    const double disc = std::sqrt(std::max(t * t - d, 0.0));
    const double lmin = d / (t + disc);  // stable smaller eigenvalue
    if (!(H(0, 0) > 0.0) || !(d > 0.0) || !(lmin > 0.0)) {
        std::ostringstream msg;
        msg << "decompose: H is not positive definite (smallest eigenvalue " << (t - disc) << ")";
        throw DomainError(msg.str());
    }
    Decomposition out;
    const double p11 = std::sqrt(H(0, 0));
    const double p12 = H(0, 1) / p11;
    const double p22 = std::sqrt(d) / p11;  // sqrt(h22 - p12^2) without cancellation
    out.P << p11, p12, 0.0, p22;
    out.Q << 1.0 / p11, -p12 / (p11 * p22), 0.0, 1.0 / p22;
    return out;
}

AnisotropySpec::AnisotropySpec() : H_(Mat2::Identity()), P_(Mat2::Identity()), Q_(Mat2::Identity()) {}

AnisotropySpec AnisotropySpec::from_H(const Mat2& H) {
    const Decomposition dec = decompose(H);
    AnisotropySpec s;
    s.H_ = 0.5 * (H + H.transpose());
    s.P_ = dec.P;
    s.Q_ = dec.Q;
    return s;
}

AnisotropySpec AnisotropySpec::from_P(const Mat2& P) {
    require_finite(P, "AnisotropySpec::from_P");
    if (P(1, 0) != 0.0) throw DomainError("AnisotropySpec::from_P: P must be upper triangular");
    if (!(P(0, 0) > 0.0) || !(P(1, 1) > 0.0))
        throw DomainError("AnisotropySpec::from_P: diagonal of P must be positive");
    AnisotropySpec s;
    s.P_ = P;
    s.H_ = P.transpose() * P;
    s.Q_ << 1.0 / P(0, 0), -P(0, 1) / (P(0, 0) * P(1, 1)), 0.0, 1.0 / P(1, 1);
    return s;
}

AnisotropySpec AnisotropySpec::from_entries(double h11, double h12, double h22) {
    Mat2 H;
    H << h11, h12, h12, h22;
    return from_H(H);
}

AnisotropySpec AnisotropySpec::from_p_entries(double p11, double p12, double p22) {
    Mat2 P;
    P << p11, p12, 0.0, p22;
    return from_P(P);
}

TransformedPoint to_transformed(const AnisotropySpec& spec, const Vec2& x, const Vec2& omega) {
    return {spec.P() * x, spec.Q().transpose() * omega};
}

Mat2 rotation(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    Mat2 r;
    r << c, -s, s, c;
    return r;
}

Mat2 transformed_rotation(const AnisotropySpec& spec, double theta) {
    return spec.Q() * rotation(-theta) * spec.P();
}

}  // namespace anisoloc
