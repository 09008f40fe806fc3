#include "qgame/states.hpp"

#include <cmath>
#include <numbers>

namespace qgame {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Matrix ket_up_projector() {
    Matrix m(2);
    m(0, 0) = 1.0;
    return m;
}

Matrix ket_down_projector() {
    Matrix m(2);
    m(1, 1) = 1.0;
    return m;
}

// |x><x| for |x> = cos(x/2)|up> + sin(x/2)|down>
Matrix tilted_ket_projector(double x) {
    const double c = std::cos(0.5 * x);
    const double s = std::sin(0.5 * x);
    Matrix m(2);
    m(0, 0) = c * c;
    m(0, 1) = c * s;
    m(1, 0) = s * c;
    m(1, 1) = s * s;
    return m;
}

void check_range(double v, double lo, double hi, const char* what) {
    if (!(v >= lo && v <= hi)) throw std::invalid_argument(std::string(what) + ": parameter out of range");
}

}  // namespace

StateFamily werner(double eta) {
    check_range(eta, 0.0, 1.0, "werner");
    // outer product of the singlet (|ud> - |du>)/sqrt(2)
    Matrix singlet(4);
    singlet(1, 1) = 0.5;
    singlet(2, 2) = 0.5;
    singlet(1, 2) = -0.5;
    singlet(2, 1) = -0.5;
    const Matrix m = (0.25 * (1.0 - eta)) * Matrix::identity(4) + eta * singlet;
    return {Family::werner, eta, DensityMatrix(m)};
}

StateFamily d1(double x) {
    check_range(x, 0.0, kTwoPi, "d1");
    const Matrix up = ket_up_projector();
    const Matrix px = tilted_ket_projector(x);
    const Matrix m = 0.5 * (tensor_product(up, up) + tensor_product(px, px));
    return {Family::d1, x, DensityMatrix(m)};
}

StateFamily d2(double x) {
    check_range(x, 0.0, kTwoPi, "d2");
    const Matrix up = ket_up_projector();
    const Matrix down = ket_down_projector();
    const Matrix px = tilted_ket_projector(x);
    const Matrix m = 0.5 * (tensor_product(up, up) + tensor_product(down, px));
    return {Family::d2, x, DensityMatrix(m)};
}

StateFamily product_state(double theta_a, double theta_b) {
    const Matrix m = tensor_product(tilted_ket_projector(theta_a), tilted_ket_projector(theta_b));
    return {Family::product, 0.0, DensityMatrix(m)};
}

StateFamily custom_state(const Matrix& m) {
    return {Family::custom, 0.0, DensityMatrix(m)};
}

Regime regime(const StateFamily& family) {
    constexpr double eps = 1e-12;
    const double p = family.parameter;
    switch (family.family) {
        case Family::werner:
            if (p <= eps) return Regime::classical;
            if (p <= 1.0 / 3.0) return Regime::discorded_separable;
            return Regime::entangled;
        case Family::d1:
        case Family::d2: {
            const bool classical = std::abs(p) <= eps || std::abs(p - std::numbers::pi) <= eps ||
                                   (family.family == Family::d1 && std::abs(p - kTwoPi) <= eps);
            // d2(2pi) coincides with d2(0) and is classical as well.
            if (family.family == Family::d2 && std::abs(p - kTwoPi) <= eps) return Regime::classical;
            return classical ? Regime::classical : Regime::discorded_separable;
        }
        default:
            throw std::invalid_argument("regime: no documented regime for this family");
    }
}

std::string family_name(Family family) {
    switch (family) {
        case Family::werner: return "werner";
        case Family::d1: return "d1";
        case Family::d2: return "d2";
        case Family::product: return "product";
        case Family::custom: return "custom";
    }
    return "?";
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::classical: return "classical";
        case Regime::discorded_separable: return "discorded_separable";
        case Regime::entangled: return "entangled";
    }
    return "?";
}

}  // namespace qgame
