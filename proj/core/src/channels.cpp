#include "qcorr/channels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qcorr {
namespace {

constexpr double kCompletenessTol = 1e-12;

void check_unit_interval(double value, const char* what) {
    if (!(value >= 0.0 && value <= 1.0)) {
        std::ostringstream msg;
        msg << what << " must lie in [0, 1], got " << value;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

KrausChannel::KrausChannel(std::string name_, std::vector<ComplexMatrix> operators_,
                           double gamma_, double q_)
    : name(std::move(name_)), operators(std::move(operators_)), gamma(gamma_), q(q_) {
    if (operators.empty()) throw std::invalid_argument("KrausChannel: empty operator set");
    for (const ComplexMatrix& op : operators)
        if (op.rows() != 2 || op.cols() != 2)
            throw std::invalid_argument("KrausChannel: operators must be 2x2");
    const double resid = completeness_residual();
    if (resid > kCompletenessTol) {
        std::ostringstream msg;
        msg << "KrausChannel '" << name << "': completeness residual " << resid
            << " exceeds 1e-12";
        throw std::invalid_argument(msg.str());
    }
}

double KrausChannel::completeness_residual() const {
    ComplexMatrix sum(2, 2);
    for (const ComplexMatrix& op : operators) sum += op.adjoint() * op;
    return max_abs_diff(sum, ComplexMatrix::identity(2));
}

KrausChannel KrausChannel::identity() {
    return KrausChannel("identity", {ComplexMatrix::identity(2)}, 0.0, 0.0);
}

double TimeParams::gamma() const { return 1.0 - std::exp(-Gamma * t); }

KrausChannel dephasing(double gamma) {
    check_unit_interval(gamma, "gamma");
    ComplexMatrix e0(2, 2), e1(2, 2);
    e0(0, 0) = 1.0;
    e0(1, 1) = std::sqrt(1.0 - gamma);
    e1(1, 1) = std::sqrt(gamma);
    return KrausChannel("dephasing", {e0, e1}, gamma, 0.0);
}

KrausChannel gad(double gamma, double q) {
    check_unit_interval(gamma, "gamma");
    check_unit_interval(q, "q");
    const double sq = std::sqrt(q);
    const double s1q = std::sqrt(1.0 - q);
    const double sg = std::sqrt(gamma);
    const double s1g = std::sqrt(1.0 - gamma);

    ComplexMatrix e0(2, 2), e1(2, 2), e2(2, 2), e3(2, 2);
    e0(0, 0) = sq;
    e0(1, 1) = sq * s1g;
    e1(0, 1) = sq * sg;
    e2(0, 0) = s1q * s1g;
    e2(1, 1) = s1q;
    e3(1, 0) = s1q * sg;
    return KrausChannel("gad", {e0, e1, e2, e3}, gamma, q);
}

KrausChannel depolarizing(double gamma) {
    check_unit_interval(gamma, "gamma");
    const double w0 = std::sqrt(1.0 - 3.0 * gamma / 4.0);
    const double wp = std::sqrt(gamma / 4.0);
    std::vector<ComplexMatrix> ops;
    ops.push_back(w0 * ComplexMatrix::identity(2));
    for (const ComplexMatrix& sigma : paulis()) ops.push_back(wp * sigma);
    return KrausChannel("depolarizing", std::move(ops), gamma, 0.0);
}

DensityMatrix apply_local_pair(const DensityMatrix& rho, const KrausChannel& chA,
                               const KrausChannel& chB) {
    ComplexMatrix out(4, 4);
    for (const ComplexMatrix& ea : chA.operators)
        for (const ComplexMatrix& fb : chB.operators) {
            const ComplexMatrix k = kron(ea, fb);
            out += k * rho.matrix() * k.adjoint();
        }
    return DensityMatrix(out);
}

DensityMatrix compose(const DensityMatrix& rho, const KrausChannel& first,
                      const KrausChannel& second) {
    return apply_local_pair(apply_local_pair(rho, first, first), second, second);
}

}  // namespace qcorr
