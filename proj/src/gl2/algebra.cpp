/*
   Copyright 2026 The bcsys Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "bcsys/gl2/algebra.hpp"

#include <variant>

#include "bcsys/error.hpp"

namespace bcsys::gl2 {

namespace {

struct Basic {
    Mat2Q h;
    IntMat2 character;
    i64 n;
    Coefficient c;
};

struct Combination {
    std::vector<std::pair<Rational, std::shared_ptr<const Gl2Element::Node>>> parts;
};

struct Convolution {
    std::shared_ptr<const Gl2Element::Node> left, right;
};

struct Involution {
    std::shared_ptr<const Gl2Element::Node> inner;
};

struct Evolution {
    std::shared_ptr<const Gl2Element::Node> inner;
    TimeParam t;
};

}  // namespace

struct Gl2Element::Node {
    i64 level;
    Mode mode;
    long precision;
    i64 det_bound;
    std::set<DoubleCoset> support;
    std::variant<Basic, Combination, Convolution, Involution, Evolution> op;
};

namespace {

using Node = Gl2Element::Node;

void require_same_mode(const Node& x, const Node& y) {
    if (x.mode != y.mode) throw Error(ErrorKind::ModeMismatch, "cannot combine exact and numeric elements");
}

Rational rational_power(const Rational& base, long e) {
    Rational b = e >= 0 ? Rational(1 / base) : base;
    Rational out(1);
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) out *= b;
    return out;
}

Coefficient evaluate(const Node& node, const Gl2Point& p);

Coefficient evaluate_basic(const Node& node, const Basic& f, const Gl2Point& p) {
    Coefficient zero = Coefficient::zero(node.mode, node.precision);
    if (double_coset(p.g) != *node.support.begin()) return zero;
    if (!p.rho.admits(p.g)) return zero;
    const FundamentalReduction red = reduce_to_fundamental_domain(p.z);
    const auto stab = stabilizer(red.z0);
    Coefficient sum = zero;
    for (const IntMat2& sigma : stab) {
        const IntMat2 w = red.delta * sigma;
        if (hermite_form(p.g * Mat2Q(w)) != f.h) continue;
        const i64 k = p.rho.left(w.adjugate()).trace_pairing(f.character, f.n);
        sum += Coefficient::root(node.mode, f.n, k, node.precision);
    }
    if (sum.is_trivially_zero()) return zero;
    return f.c * sum * Rational(1, static_cast<long>(stab.size()));
}

Coefficient evaluate_convolution(const Node& node, const Convolution& f, const Gl2Point& p) {
    Coefficient sum = Coefficient::zero(node.mode, node.precision);
    for (const DoubleCoset& dc : f.right->support)
        for (const Mat2Q& s : left_cosets(dc)) {
            const auto srho = p.rho.act(s);
            if (!srho) continue;
            const Mat2Q gs = p.g * s.inverse();
            if (!f.left->support.contains(double_coset(gs))) continue;
            const Coefficient right = evaluate(*f.right, {s, p.rho, p.z});
            if (right.is_trivially_zero()) continue;
            const Coefficient left = evaluate(*f.left, {gs, *srho, mobius(s, p.z)});
            if (left.is_trivially_zero()) continue;
            sum += left * right;
        }
    return sum;
}

Coefficient evaluate(const Node& node, const Gl2Point& p) {
    return std::visit(
        [&](const auto& f) -> Coefficient {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Basic>) {
                return evaluate_basic(node, f, p);
            } else if constexpr (std::is_same_v<T, Combination>) {
                Coefficient sum = Coefficient::zero(node.mode, node.precision);
                for (const auto& [c, part] : f.parts) sum += evaluate(*part, p) * c;
                return sum;
            } else if constexpr (std::is_same_v<T, Convolution>) {
                return evaluate_convolution(node, f, p);
            } else if constexpr (std::is_same_v<T, Involution>) {
                const auto grho = p.rho.act(p.g);
                if (!grho) return Coefficient::zero(node.mode, node.precision);
                return evaluate(*f.inner, {p.g.inverse(), *grho, mobius(p.g, p.z)}).conj();
            } else {
                Coefficient v = evaluate(*f.inner, p);
                if (node.mode == Mode::exact) return v * rational_power(p.g.det(), numtower::to_i64(f.t.im.get_num()));
                return v * Coefficient(bcalg::ratio_power(p.g.det(), f.t, node.precision));
            }
        },
        node.op);
}

numtower::Json node_json(const Node& node) {
    return std::visit(
        [&](const auto& f) -> numtower::Json {
            using T = std::decay_t<decltype(f)>;
            numtower::Json j;
            if constexpr (std::is_same_v<T, Basic>) {
                const auto [m, e] = f.h.integral();
                const i64 k = m.content();
                j = {{"op", "basic"},
                     {"level", f.n},
                     {"coset", {{"a", m.a / k}, {"b", m.b / k}, {"d", m.d / k}, {"scalar", numtower::to_string(numtower::make_rational(k, e))}}},
                     {"character", f.character},
                     {"coefficient", f.c}};
            } else if constexpr (std::is_same_v<T, Combination>) {
                j = {{"op", "sum"}, {"parts", numtower::Json::array()}};
                for (const auto& [c, part] : f.parts)
                    j["parts"].push_back({{"scale", numtower::to_string(c)}, {"element", node_json(*part)}});
            } else if constexpr (std::is_same_v<T, Convolution>) {
                j = {{"op", "convolve"}, {"left", node_json(*f.left)}, {"right", node_json(*f.right)}};
            } else if constexpr (std::is_same_v<T, Involution>) {
                j = {{"op", "involution"}, {"inner", node_json(*f.inner)}};
            } else {
                j = {{"op", "time_evolve"},
                     {"t", {{"re", numtower::to_string(f.t.re)}, {"im", numtower::to_string(f.t.im)}}},
                     {"inner", node_json(*f.inner)}};
            }
            j["det_bound"] = node.det_bound;
            return j;
        },
        node.op);
}

}  // namespace

bool in_space(const Gl2Point& p) { return p.rho.admits(p.g); }

Gl2Point gamma_action(const IntMat2& gamma1, const IntMat2& gamma2, const Gl2Point& p) {
    if (gamma1.det() != 1 || gamma2.det() != 1) throw Error(ErrorKind::InvalidArgument, "gamma_action needs determinant 1");
    const Mat2Q g2(gamma2);
    return {Mat2Q(gamma1) * p.g * Mat2Q(gamma2.adjugate()), p.rho.left(gamma2), mobius(g2, p.z)};
}

Gl2Element Gl2Element::basic(i64 level, const Mat2Q& h, const IntMat2& character, Coefficient c, i64 det_bound) {
    if (level < 1) throw Error(ErrorKind::InvalidArgument, "level must be positive");
    if (height(h.det()) > det_bound)
        throw Error(ErrorKind::DeterminantBoundExceeded,
                    "det " + numtower::to_string(h.det()) + " exceeds the bound " + std::to_string(det_bound));
    const Mode mode = c.mode();
    const long precision = mode == Mode::numeric ? c.numeric().precision() : numtower::kDefaultPrecision;
    const IntMat2 k{numtower::mod(character.a, level), numtower::mod(character.b, level), numtower::mod(character.c, level),
                    numtower::mod(character.d, level)};
    auto node = std::make_shared<Node>(Node{level, mode, precision, det_bound, {double_coset(h)},
                                            Basic{hermite_form(h), k, level, std::move(c)}});
    return Gl2Element(std::move(node));
}

Gl2Element Gl2Element::identity(Mode mode, long precision) {
    return basic(1, Mat2Q(), IntMat2{0, 0, 0, 0}, Coefficient::one(mode, precision), 1);
}

i64 Gl2Element::level() const { return node_->level; }
Mode Gl2Element::mode() const { return node_->mode; }
long Gl2Element::precision() const { return node_->precision; }
i64 Gl2Element::det_bound() const { return node_->det_bound; }
const std::set<DoubleCoset>& Gl2Element::support() const { return node_->support; }

Coefficient Gl2Element::evaluate(const Gl2Point& p) const { return gl2::evaluate(*node_, p); }

Gl2Element operator+(const Gl2Element& x, const Gl2Element& y) {
    require_same_mode(*x.node_, *y.node_);
    std::set<DoubleCoset> support = x.support();
    support.insert(y.support().begin(), y.support().end());
    Combination sum{{{Rational(1), x.node_}, {Rational(1), y.node_}}};
    return Gl2Element(std::make_shared<Node>(Node{numtower::lcm(x.level(), y.level()), x.mode(),
                                                  std::max(x.precision(), y.precision()),
                                                  std::max(x.det_bound(), y.det_bound()), std::move(support), std::move(sum)}));
}

Gl2Element operator*(const Rational& c, const Gl2Element& x) {
    const Node& n = *x.node_;
    return Gl2Element(std::make_shared<Node>(
        Node{n.level, n.mode, n.precision, n.det_bound, n.support, Combination{{{c, x.node_}}}}));
}

Gl2Element gl2_convolve(const Gl2Element& x, const Gl2Element& y, std::optional<i64> cap) {
    require_same_mode(*x.node_, *y.node_);
    i64 bound = 0;
    if (__builtin_mul_overflow(x.det_bound(), y.det_bound(), &bound) || (cap && bound > *cap))
        throw Error(ErrorKind::DeterminantBoundExceeded, "product determinant bound exceeds the cap");
    std::set<DoubleCoset> support;
    for (const DoubleCoset& a : x.support())
        for (const DoubleCoset& b : y.support()) {
            const i64 m = numtower::checked_mul(a.m, b.m);
            for (i64 k = 1; k * k <= m; ++k)
                if (m % (k * k) == 0) support.insert({a.scale * b.scale * k, m / (k * k)});
        }
    return Gl2Element(std::make_shared<Node>(Node{numtower::lcm(x.level(), y.level()), x.mode(),
                                                  std::max(x.precision(), y.precision()), bound, std::move(support),
                                                  Convolution{x.node_, y.node_}}));
}

Gl2Element gl2_involution(const Gl2Element& x) {
    std::set<DoubleCoset> support;
    for (const DoubleCoset& a : x.support()) support.insert({1 / (a.scale * a.m), a.m});
    const Node& n = *x.node_;
    return Gl2Element(
        std::make_shared<Node>(Node{n.level, n.mode, n.precision, n.det_bound, std::move(support), Involution{x.node_}}));
}

Gl2Element gl2_time_evolve(const Gl2Element& x, const TimeParam& t) {
    const Node& n = *x.node_;
    if (n.mode == Mode::exact && (t.re != 0 || t.im.get_den() != 1))
        throw Error(ErrorKind::ModeMismatch, "exact time evolution needs t = iβ with integer β");
    return Gl2Element(std::make_shared<Node>(Node{n.level, n.mode, n.precision, n.det_bound, n.support, Evolution{x.node_, t}}));
}

void to_json(numtower::Json& j, const Gl2Element& x) {
    j = {{"level", x.level()}, {"mode", bcalg::to_string(x.mode())}, {"det_bound", x.det_bound()},
         {"element", node_json(*x.node_)}};
}

}  // namespace bcsys::gl2
