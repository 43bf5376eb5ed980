#include "lctk/time_expr.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <sstream>

#include "lctk/errors.hpp"

namespace lctk {

namespace te {

namespace {
TimeExprPtr make(TimeExpr::Node node) { return std::make_shared<const TimeExpr>(std::move(node)); }
}  // namespace

TimeExprPtr constant(const Rational& c) { return make(ConstNode{c}); }
TimeExprPtr power(unsigned n) { return make(PowerNode{n}); }
TimeExprPtr exponential(const Rational& a) { return make(ExpNode{a}); }
TimeExprPtr sine(const Rational& w) { return make(SinNode{w}); }
TimeExprPtr cosine(const Rational& w) { return make(CosNode{w}); }

TimeExprPtr scale(const Rational& c, TimeExprPtr f) { return make(ScaleNode{c, std::move(f)}); }

TimeExprPtr add(TimeExprPtr f, TimeExprPtr g) { return make(AddNode{std::move(f), std::move(g)}); }

TimeExprPtr exp_mul(const Rational& a, TimeExprPtr f) {
    return make(ExpMulNode{a, std::move(f)});
}

TimeExprPtr shift_right(const Rational& a, TimeExprPtr f) {
    if (a.sign() <= 0) {
        throw InvalidArgument("time shift must be positive");
    }
    return make(ShiftRightNode{a, std::move(f)});
}

TimeExprPtr time_scale(const Rational& c, TimeExprPtr f) {
    if (c.sign() <= 0) {
        throw InvalidArgument("time scale must be positive");
    }
    return make(TimeScaleNode{c, std::move(f)});
}

TimeExprPtr mod_cos(const Rational& b, TimeExprPtr f) { return make(ModCosNode{b, std::move(f)}); }
TimeExprPtr mod_sin(const Rational& b, TimeExprPtr f) { return make(ModSinNode{b, std::move(f)}); }

TimeExprPtr deriv(unsigned k, TimeExprPtr f, std::vector<Rational> iv) {
    if (k < 1) {
        throw InvalidArgument("derivative order must be >= 1");
    }
    if (!iv.empty() && iv.size() != k) {
        throw InvalidArgument("initial value list must have length equal to derivative order");
    }
    return make(DerivNode{k, std::move(f), std::move(iv)});
}

TimeExprPtr integ(TimeExprPtr f) { return make(IntegNode{std::move(f)}); }

}  // namespace te

bool contains_shift(const TimeExpr& f) {
    return std::visit(
        [](const auto& node) -> bool {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ShiftRightNode>) {
                return true;
            } else if constexpr (std::is_same_v<T, AddNode>) {
                return contains_shift(*node.f) || contains_shift(*node.g);
            } else if constexpr (std::is_same_v<T, ScaleNode> || std::is_same_v<T, ExpMulNode> ||
                                 std::is_same_v<T, TimeScaleNode> ||
                                 std::is_same_v<T, ModCosNode> || std::is_same_v<T, ModSinNode> ||
                                 std::is_same_v<T, DerivNode>) {
                return contains_shift(*node.f);
            } else if constexpr (std::is_same_v<T, IntegNode>) {
                return contains_shift(*node.f);
            } else {
                return false;
            }
        },
        f.node());
}

TimeExprPtr diff(const TimeExprPtr& f) {
    return std::visit(
        [&](const auto& node) -> TimeExprPtr {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ConstNode>) {
                return te::constant(Rational(0));
            } else if constexpr (std::is_same_v<T, PowerNode>) {
                if (node.n == 0) return te::constant(Rational(0));
                return te::scale(Rational(static_cast<long long>(node.n)),
                                 te::power(node.n - 1));
            } else if constexpr (std::is_same_v<T, ExpNode>) {
                return te::scale(node.a, te::exponential(node.a));
            } else if constexpr (std::is_same_v<T, SinNode>) {
                return te::scale(node.w, te::cosine(node.w));
            } else if constexpr (std::is_same_v<T, CosNode>) {
                return te::scale(-node.w, te::sine(node.w));
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                return te::scale(node.c, diff(node.f));
            } else if constexpr (std::is_same_v<T, AddNode>) {
                return te::add(diff(node.f), diff(node.g));
            } else if constexpr (std::is_same_v<T, ExpMulNode>) {
                return te::add(te::scale(node.a, te::exp_mul(node.a, node.f)),
                               te::exp_mul(node.a, diff(node.f)));
            } else if constexpr (std::is_same_v<T, ShiftRightNode>) {
                throw UnsupportedComposition(
                    "cannot differentiate a time-shifted signal (jump at the shift point)");
            } else if constexpr (std::is_same_v<T, TimeScaleNode>) {
                return te::scale(node.c, te::time_scale(node.c, diff(node.f)));
            } else if constexpr (std::is_same_v<T, ModCosNode>) {
                return te::add(te::scale(-node.b, te::mod_sin(node.b, node.f)),
                               te::mod_cos(node.b, diff(node.f)));
            } else if constexpr (std::is_same_v<T, ModSinNode>) {
                return te::add(te::scale(node.b, te::mod_cos(node.b, node.f)),
                               te::mod_sin(node.b, diff(node.f)));
            } else if constexpr (std::is_same_v<T, DerivNode>) {
                TimeExprPtr expanded = expand_derivs(node.f);
                for (unsigned i = 0; i < node.k + 1; ++i) expanded = diff(expanded);
                return expanded;
            } else {  // IntegNode
                return expand_derivs(node.f);
            }
        },
        f->node());
}

TimeExprPtr expand_derivs(const TimeExprPtr& f) {
    return std::visit(
        [&](const auto& node) -> TimeExprPtr {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ScaleNode>) {
                return te::scale(node.c, expand_derivs(node.f));
            } else if constexpr (std::is_same_v<T, AddNode>) {
                return te::add(expand_derivs(node.f), expand_derivs(node.g));
            } else if constexpr (std::is_same_v<T, ExpMulNode>) {
                return te::exp_mul(node.a, expand_derivs(node.f));
            } else if constexpr (std::is_same_v<T, ShiftRightNode>) {
                return te::shift_right(node.a, expand_derivs(node.f));
            } else if constexpr (std::is_same_v<T, TimeScaleNode>) {
                return te::time_scale(node.c, expand_derivs(node.f));
            } else if constexpr (std::is_same_v<T, ModCosNode>) {
                return te::mod_cos(node.b, expand_derivs(node.f));
            } else if constexpr (std::is_same_v<T, ModSinNode>) {
                return te::mod_sin(node.b, expand_derivs(node.f));
            } else if constexpr (std::is_same_v<T, DerivNode>) {
                TimeExprPtr expanded = expand_derivs(node.f);
                for (unsigned i = 0; i < node.k; ++i) expanded = diff(expanded);
                return expanded;
            } else if constexpr (std::is_same_v<T, IntegNode>) {
                return te::integ(expand_derivs(node.f));
            } else {
                return std::make_shared<const TimeExpr>(TimeExpr::Node(node));
            }
        },
        f->node());
}

double TimeEvaluator::operator()(const TimeExpr& f, double t) const { return eval(f, t); }

namespace {

// adaptive Simpson for the internal cumulative-integral cache
double simpson_rec(const std::function<double(double)>& g, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = g(lm);
    double frm = g(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return simpson_rec(g, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
           simpson_rec(g, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

double simpson(const std::function<double(double)>& g, double a, double b, double tol) {
    if (a == b) return 0.0;
    double fa = g(a);
    double fb = g(b);
    double fm = g(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(g, a, b, fa, fm, fb, whole, tol, 40);
}

}  // namespace

double TimeEvaluator::integral_to(const TimeExpr& key, const TimeExpr& inner, double t) const {
    auto& cache = integ_cache_[&key];
    if (cache.empty()) cache.emplace(0.0, 0.0);
    auto it = cache.upper_bound(t);
    // greatest cached point <= t
    --it;
    double t0 = it->first;
    double acc = it->second;
    if (t0 == t) return acc;
    auto g = [&](double tau) { return eval(inner, tau); };
    double tol = 1e-12 * std::max(1.0, std::abs(t - t0));
    double value = acc + simpson(g, t0, t, tol);
    if (t > t0) cache.emplace(t, value);
    return value;
}

double TimeEvaluator::eval(const TimeExpr& f, double t) const {
    return std::visit(
        [&](const auto& node) -> double {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ConstNode>) {
                return node.c.to_double();
            } else if constexpr (std::is_same_v<T, PowerNode>) {
                return std::pow(t, static_cast<double>(node.n));
            } else if constexpr (std::is_same_v<T, ExpNode>) {
                return std::exp(node.a.to_double() * t);
            } else if constexpr (std::is_same_v<T, SinNode>) {
                return std::sin(node.w.to_double() * t);
            } else if constexpr (std::is_same_v<T, CosNode>) {
                return std::cos(node.w.to_double() * t);
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                return node.c.to_double() * eval(*node.f, t);
            } else if constexpr (std::is_same_v<T, AddNode>) {
                return eval(*node.f, t) + eval(*node.g, t);
            } else if constexpr (std::is_same_v<T, ExpMulNode>) {
                return std::exp(node.a.to_double() * t) * eval(*node.f, t);
            } else if constexpr (std::is_same_v<T, ShiftRightNode>) {
                double a = node.a.to_double();
                return t >= a ? eval(*node.f, t - a) : 0.0;
            } else if constexpr (std::is_same_v<T, TimeScaleNode>) {
                return eval(*node.f, node.c.to_double() * t);
            } else if constexpr (std::is_same_v<T, ModCosNode>) {
                return std::cos(node.b.to_double() * t) * eval(*node.f, t);
            } else if constexpr (std::is_same_v<T, ModSinNode>) {
                return std::sin(node.b.to_double() * t) * eval(*node.f, t);
            } else if constexpr (std::is_same_v<T, DerivNode>) {
                auto it = deriv_cache_.find(&f);
                if (it == deriv_cache_.end()) {
                    TimeExprPtr expanded = expand_derivs(node.f);
                    for (unsigned i = 0; i < node.k; ++i) expanded = diff(expanded);
                    it = deriv_cache_.emplace(&f, std::move(expanded)).first;
                }
                return eval(*it->second, t);
            } else {  // IntegNode
                return integral_to(f, *node.f, t);
            }
        },
        f.node());
}

// ---------------------------------------------------------------------------
// s-expression reader/printer

namespace {

struct SexprParser {
    std::string_view src;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg + " at position " + std::to_string(pos));
    }

    std::string read_atom() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && !std::isspace(static_cast<unsigned char>(src[pos])) &&
               src[pos] != '(' && src[pos] != ')') {
            ++pos;
        }
        if (start == pos) fail("expected atom");
        return std::string(src.substr(start, pos - start));
    }

    Rational read_rational() { return Rational::parse(read_atom()); }

    unsigned read_unsigned() {
        Rational r = read_rational();
        if (!r.is_integer() || r.sign() < 0) fail("expected a nonnegative integer");
        return static_cast<unsigned>(r.numerator().convert_to<unsigned long long>());
    }

    void expect(char c) {
        skip_ws();
        if (pos >= src.size() || src[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    bool at_close() {
        skip_ws();
        return pos < src.size() && src[pos] == ')';
    }

    TimeExprPtr parse() {
        skip_ws();
        if (pos < src.size() && src[pos] != '(') {
            // bare number shorthand for (const c)
            return te::constant(read_rational());
        }
        expect('(');
        std::string head = read_atom();
        TimeExprPtr result;
        if (head == "const") {
            result = te::constant(read_rational());
        } else if (head == "pow") {
            result = te::power(read_unsigned());
        } else if (head == "exp") {
            result = te::exponential(read_rational());
        } else if (head == "sin") {
            result = te::sine(read_rational());
        } else if (head == "cos") {
            result = te::cosine(read_rational());
        } else if (head == "scale") {
            Rational c = read_rational();
            result = te::scale(c, parse());
        } else if (head == "add") {
            TimeExprPtr acc = parse();
            while (!at_close()) acc = te::add(acc, parse());
            result = acc;
        } else if (head == "expmul") {
            Rational a = read_rational();
            result = te::exp_mul(a, parse());
        } else if (head == "shift") {
            Rational a = read_rational();
            result = te::shift_right(a, parse());
        } else if (head == "tscale") {
            Rational c = read_rational();
            result = te::time_scale(c, parse());
        } else if (head == "modcos") {
            Rational b = read_rational();
            result = te::mod_cos(b, parse());
        } else if (head == "modsin") {
            Rational b = read_rational();
            result = te::mod_sin(b, parse());
        } else if (head == "deriv") {
            unsigned k = read_unsigned();
            TimeExprPtr f = parse();
            std::vector<Rational> iv;
            while (!at_close()) iv.push_back(read_rational());
            result = te::deriv(k, std::move(f), std::move(iv));
        } else if (head == "integ") {
            result = te::integ(parse());
        } else {
            fail("unknown operator '" + head + "'");
        }
        expect(')');
        return result;
    }
};

}  // namespace

TimeExprPtr time_expr_from_sexpr(std::string_view text) {
    SexprParser p{text};
    TimeExprPtr e = p.parse();
    p.skip_ws();
    if (p.pos != text.size()) {
        throw SyntaxError("trailing input after expression at position " + std::to_string(p.pos));
    }
    return e;
}

std::string time_expr_to_sexpr(const TimeExpr& f) {
    return std::visit(
        [&](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            std::ostringstream os;
            if constexpr (std::is_same_v<T, ConstNode>) {
                os << "(const " << node.c << ")";
            } else if constexpr (std::is_same_v<T, PowerNode>) {
                os << "(pow " << node.n << ")";
            } else if constexpr (std::is_same_v<T, ExpNode>) {
                os << "(exp " << node.a << ")";
            } else if constexpr (std::is_same_v<T, SinNode>) {
                os << "(sin " << node.w << ")";
            } else if constexpr (std::is_same_v<T, CosNode>) {
                os << "(cos " << node.w << ")";
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                os << "(scale " << node.c << " " << time_expr_to_sexpr(*node.f) << ")";
            } else if constexpr (std::is_same_v<T, AddNode>) {
                os << "(add " << time_expr_to_sexpr(*node.f) << " " << time_expr_to_sexpr(*node.g)
                   << ")";
            } else if constexpr (std::is_same_v<T, ExpMulNode>) {
                os << "(expmul " << node.a << " " << time_expr_to_sexpr(*node.f) << ")";
            } else if constexpr (std::is_same_v<T, ShiftRightNode>) {
                os << "(shift " << node.a << " " << time_expr_to_sexpr(*node.f) << ")";
            } else if constexpr (std::is_same_v<T, TimeScaleNode>) {
                os << "(tscale " << node.c << " " << time_expr_to_sexpr(*node.f) << ")";
            } else if constexpr (std::is_same_v<T, ModCosNode>) {
                os << "(modcos " << node.b << " " << time_expr_to_sexpr(*node.f) << ")";
            } else if constexpr (std::is_same_v<T, ModSinNode>) {
                os << "(modsin " << node.b << " " << time_expr_to_sexpr(*node.f) << ")";
            } else if constexpr (std::is_same_v<T, DerivNode>) {
                os << "(deriv " << node.k << " " << time_expr_to_sexpr(*node.f);
                for (const auto& v : node.iv) os << " " << v;
                os << ")";
            } else {  // IntegNode
                os << "(integ " << time_expr_to_sexpr(*node.f) << ")";
            }
            return os.str();
        },
        f.node());
}

}  // namespace lctk
