#include "mzres/flux.hpp"

#include <cmath>

namespace mzres {

namespace {

struct FaceState {
    double rho, u, v, p, h, a, un;
};

FaceState face_state(const Vec4& w, const GasModel& gas, double p_inf, const Vec2& nhat) {
    FaceState s;
    s.p = w[0] + p_inf;
    s.u = w[1];
    s.v = w[2];
    s.rho = s.p / (gas.gas_constant * w[3]);
    s.h = gas.cp() * w[3] + 0.5 * (s.u * s.u + s.v * s.v);
    s.a = std::sqrt(gas.gamma * gas.gas_constant * w[3]);
    s.un = s.u * nhat.x + s.v * nhat.y;
    return s;
}

} // namespace

Vec4 euler_flux(const Vec4& w, const GasModel& gas, double p_inf, const Vec2& n) {
    const double len = n.norm();
    if (len == 0.0) return {0, 0, 0, 0};
    const Vec2 nhat = n * (1.0 / len);
    const FaceState s = face_state(w, gas, p_inf, nhat);
    const double mt = s.rho * s.un;
    return Vec4{mt, mt * s.u + s.p * nhat.x, mt * s.v + s.p * nhat.y, mt * s.h} * len;
}

Vec4 roe_flux(const Vec4& wL, const Vec4& wR, const GasModel& gas, double p_inf,
              const Vec2& n, double entropy_fix) {
    const double len = n.norm();
    if (len == 0.0) return {0, 0, 0, 0};
    const Vec2 nhat = n * (1.0 / len);
    const Vec2 that{-nhat.y, nhat.x};

    const FaceState l = face_state(wL, gas, p_inf, nhat);
    const FaceState r = face_state(wR, gas, p_inf, nhat);

    const Vec4 fl{l.rho * l.un, l.rho * l.un * l.u + l.p * nhat.x,
                  l.rho * l.un * l.v + l.p * nhat.y, l.rho * l.un * l.h};
    const Vec4 fr{r.rho * r.un, r.rho * r.un * r.u + r.p * nhat.x,
                  r.rho * r.un * r.v + r.p * nhat.y, r.rho * r.un * r.h};

    // Roe averages.
    const double rt = std::sqrt(r.rho / l.rho);
    const double wsum = 1.0 + rt;
    const double ua = (l.u + rt * r.u) / wsum;
    const double va = (l.v + rt * r.v) / wsum;
    const double ha = (l.h + rt * r.h) / wsum;
    const double q2 = ua * ua + va * va;
    const double a2 = (gas.gamma - 1.0) * (ha - 0.5 * q2);
    const double aa = std::sqrt(a2);
    const double una = ua * nhat.x + va * nhat.y;
    const double uta = ua * that.x + va * that.y;
    const double rhoa = rt * l.rho;

    const double drho = r.rho - l.rho;
    const double dp = r.p - l.p;
    const double dun = r.un - l.un;
    const double dut = (r.u * that.x + r.v * that.y) - (l.u * that.x + l.v * that.y);

    const double a1 = (dp - rhoa * aa * dun) / (2.0 * a2);
    const double a2c = drho - dp / a2;
    const double a4 = (dp + rhoa * aa * dun) / (2.0 * a2);

    double lm1 = std::abs(una - aa);
    double lm2 = std::abs(una);
    double lm4 = std::abs(una + aa);
    const double delta = entropy_fix * (std::abs(una) + aa);
    if (lm1 < delta) lm1 = 0.5 * (lm1 * lm1 / delta + delta);
    if (lm4 < delta) lm4 = 0.5 * (lm4 * lm4 / delta + delta);

    Vec4 diss{0, 0, 0, 0};
    diss += Vec4{1.0, ua - aa * nhat.x, va - aa * nhat.y, ha - aa * una} * (lm1 * a1);
    diss += Vec4{1.0, ua, va, 0.5 * q2} * (lm2 * a2c);
    diss += Vec4{0.0, that.x, that.y, uta} * (lm2 * rhoa * dut);
    diss += Vec4{1.0, ua + aa * nhat.x, va + aa * nhat.y, ha + aa * una} * (lm4 * a4);

    return ((fl + fr) - diss) * (0.5 * len);
}

Vec4 viscous_flux(const Vec4& wL, const Vec4& wR, const Grad4& gradL,
                  const Grad4& gradR, const Vec2& e, const Vec2& n,
                  const GasModel& gas, double mu, double alpha) {
    const double len = n.norm();
    if (len == 0.0 || mu == 0.0) return {0, 0, 0, 0};
    const Vec2 nhat = n * (1.0 / len);
    const double elen = e.norm();
    const Vec2 ehat = e * (1.0 / elen);

    // Damped face gradients of u, v, T.
    Vec2 g[3];
    for (int c = 0; c < 3; ++c) {
        const int slot = c + 1;
        const Vec2 mean = (gradL[slot] + gradR[slot]) * 0.5;
        const double correction =
            alpha / elen * (wR[slot] - wL[slot] - mean.dot(e));
        g[c] = mean + ehat * correction;
    }
    const Vec2 gu = g[0], gv = g[1], gt = g[2];

    const double div = gu.x + gv.y;
    const double txx = mu * (2.0 * gu.x - 2.0 / 3.0 * div);
    const double tyy = mu * (2.0 * gv.y - 2.0 / 3.0 * div);
    const double txy = mu * (gu.y + gv.x);

    const double uf = 0.5 * (wL[1] + wR[1]);
    const double vf = 0.5 * (wL[2] + wR[2]);
    const double kappa = mu * gas.cp() / gas.prandtl;

    const double fx = txx * nhat.x + txy * nhat.y;
    const double fy = txy * nhat.x + tyy * nhat.y;
    const double fe = (txx * uf + txy * vf) * nhat.x + (txy * uf + tyy * vf) * nhat.y +
                      kappa * gt.dot(nhat);
    return Vec4{0.0, fx, fy, fe} * len;
}

} // namespace mzres
