#include "lctk/ufss.hpp"

namespace lctk {

namespace {

const Rational k0p1088{BigInt(1088), BigInt(10000)};
const Rational k0p0416{BigInt(416), BigInt(10000)};
const Rational k0p25{BigInt(25), BigInt(100)};
const Rational k0p6106{BigInt(6106), BigInt(10000)};
const Rational k3p207{BigInt(3207), BigInt(1000)};
const Rational k3p456{BigInt(3456), BigInt(1000)};

}  // namespace

OdeSystem ufss_pitch_ode(const UfssParams& p) {
    std::vector<ParamPoly> alpha{
        p.k1.scaled(k0p1088) + ParamPoly(k0p0416),
        p.k1.scaled(k0p25) + p.k2.scaled(k0p1088) + ParamPoly(k0p6106),
        p.k2.scaled(k0p25) + ParamPoly(k3p207),
        ParamPoly(k3p456),
        ParamPoly(Rational(1)),
    };
    std::vector<ParamPoly> beta{
        p.k1.scaled(k0p1088),
        p.k1.scaled(k0p25),
    };
    return {std::move(alpha), std::move(beta)};
}

TransferFunction ufss_pitch_tf(const UfssParams& p) {
    // numerator 0.25 K1 s + 0.1088 K1
    SPoly num{std::vector<ParamPoly>{p.k1.scaled(k0p1088), p.k1.scaled(k0p25)}};
    // denominator s^4 + 3.456 s^3 + (0.25 K2 + 3.207) s^2
    //             + (0.25 K1 + 0.1088 K2 + 0.6106) s + (0.1088 K1 + 0.0416)
    SPoly den{std::vector<ParamPoly>{
        p.k1.scaled(k0p1088) + ParamPoly(k0p0416),
        p.k1.scaled(k0p25) + p.k2.scaled(k0p1088) + ParamPoly(k0p6106),
        p.k2.scaled(k0p25) + ParamPoly(k3p207),
        ParamPoly(k3p456),
        ParamPoly(Rational(1)),
    }};
    return {std::move(num), std::move(den), 0.0};
}

}  // namespace lctk
