#pragma once

// Closed AST of time-domain signals: polynomial/exponential/trigonometric
// leaves plus the combinators the Laplace property rules are stated for.
// Values are immutable and shared via shared_ptr.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lctk/rational.hpp"

namespace lctk {

class TimeExpr;
using TimeExprPtr = std::shared_ptr<const TimeExpr>;

struct ConstNode {
    Rational c;
};
struct PowerNode {  // t^n
    unsigned n;
};
struct ExpNode {  // e^{a t}
    Rational a;
};
struct SinNode {  // sin(w t)
    Rational w;
};
struct CosNode {  // cos(w t)
    Rational w;
};
struct ScaleNode {  // c * f(t)
    Rational c;
    TimeExprPtr f;
};
struct AddNode {  // f(t) + g(t)
    TimeExprPtr f;
    TimeExprPtr g;
};
struct ExpMulNode {  // e^{a t} * f(t)
    Rational a;
    TimeExprPtr f;
};
struct ShiftRightNode {  // f(t - a) * u(t - a), a > 0
    Rational a;
    TimeExprPtr f;
};
struct TimeScaleNode {  // f(c t), c > 0
    Rational c;
    TimeExprPtr f;
};
struct ModCosNode {  // cos(b t) * f(t)
    Rational b;
    TimeExprPtr f;
};
struct ModSinNode {  // sin(b t) * f(t)
    Rational b;
    TimeExprPtr f;
};
struct DerivNode {  // d^k/dt^k f(t); iv holds f(0), f'(0), ..., f^{(k-1)}(0)
    unsigned k;
    TimeExprPtr f;
    std::vector<Rational> iv;  // empty = zero initial conditions
};
struct IntegNode {  // integral of f over [0, t]
    TimeExprPtr f;
};

class TimeExpr {
public:
    using Node = std::variant<ConstNode, PowerNode, ExpNode, SinNode, CosNode, ScaleNode, AddNode,
                              ExpMulNode, ShiftRightNode, TimeScaleNode, ModCosNode, ModSinNode,
                              DerivNode, IntegNode>;

    explicit TimeExpr(Node node) : node_(std::move(node)) {}
    [[nodiscard]] const Node& node() const { return node_; }

private:
    Node node_;
};

// Builders validate node invariants (ShiftRight.a > 0, TimeScale.c > 0,
// Deriv.k >= 1).
namespace te {
TimeExprPtr constant(const Rational& c);
TimeExprPtr power(unsigned n);
TimeExprPtr exponential(const Rational& a);
TimeExprPtr sine(const Rational& w);
TimeExprPtr cosine(const Rational& w);
TimeExprPtr scale(const Rational& c, TimeExprPtr f);
TimeExprPtr add(TimeExprPtr f, TimeExprPtr g);
TimeExprPtr exp_mul(const Rational& a, TimeExprPtr f);
TimeExprPtr shift_right(const Rational& a, TimeExprPtr f);
TimeExprPtr time_scale(const Rational& c, TimeExprPtr f);
TimeExprPtr mod_cos(const Rational& b, TimeExprPtr f);
TimeExprPtr mod_sin(const Rational& b, TimeExprPtr f);
TimeExprPtr deriv(unsigned k, TimeExprPtr f, std::vector<Rational> iv = {});
TimeExprPtr integ(TimeExprPtr f);
}  // namespace te

/// True when any ShiftRight node occurs in the expression.
bool contains_shift(const TimeExpr& f);

/// Symbolic time derivative; rejects expressions containing ShiftRight
/// (jump discontinuities) with UnsupportedComposition.
TimeExprPtr diff(const TimeExprPtr& f);

/// Rewrite every Deriv node into repeated symbolic differentiation.
TimeExprPtr expand_derivs(const TimeExprPtr& f);

/// Pointwise evaluation for t >= 0. Keeps an internal cumulative-integral
/// cache per Integ node, so repeated evaluations stay cheap.
class TimeEvaluator {
public:
    double operator()(const TimeExpr& f, double t) const;

private:
    double eval(const TimeExpr& f, double t) const;
    double integral_to(const TimeExpr& key, const TimeExpr& inner, double t) const;

    mutable std::map<const TimeExpr*, std::map<double, double>> integ_cache_;
    mutable std::map<const TimeExpr*, TimeExprPtr> deriv_cache_;
};

/// S-expression syntax, e.g. `(add (scale 3 (exp -1)) (modcos 2 (pow 1)))`.
TimeExprPtr time_expr_from_sexpr(std::string_view text);
std::string time_expr_to_sexpr(const TimeExpr& f);

}  // namespace lctk
