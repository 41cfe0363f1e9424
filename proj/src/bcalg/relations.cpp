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

#include "bcsys/bcalg/relations.hpp"

#include <functional>

namespace bcsys::bcalg {

using numtower::lcm;

namespace {

class Checker {
public:
    Checker(i64 level, const RelationOptions& options) : level_(level), options_(options) {}

    AlgebraElement mu(i64 n) const {
        AlgebraElement m = gen_mu(n, level_);
        return options_.corrupt_generator ? Rational(2) * m : m;
    }

    AlgebraElement e(const QmodZ& r) const { return gen_e(r, level_); }

    /// A level for right-hand-side generators that need `needed` | level.
    i64 rhs_level(i64 needed) const {
        if (level_ % needed == 0) return level_;
        if (options_.policy == LevelPolicy::strict)
            throw Error(ErrorKind::LevelMismatch, "right-hand side needs level " + std::to_string(lcm(level_, needed)) +
                                                      ", have " + std::to_string(level_));
        return lcm(level_, needed);
    }

    void row(std::string relation, std::string instance,
             const std::function<std::pair<AlgebraElement, AlgebraElement>()>& sides) {
        try {
            const auto [lhs, rhs] = sides();
            const auto diff = first_difference(lhs, rhs);
            rows_.push_back({std::move(relation), std::move(instance), !diff.has_value(), diff.value_or("")});
        } catch (const Error& err) {
            rows_.push_back({std::move(relation), std::move(instance), false, err.what()});
        }
    }

    std::vector<RelationRow> take() { return std::move(rows_); }

    i64 level() const { return level_; }

private:
    i64 level_;
    RelationOptions options_;
    std::vector<RelationRow> rows_;
};

/// (1/n)Σ_{ns=r} e(s) with every e(s) built at the given level.
AlgebraElement averaged(i64 n, const QmodZ& r, i64 level) {
    AlgebraElement sum(level, Mode::exact);
    for (i64 j = 0; j < n; ++j) sum = sum + gen_e(QmodZ(r.num() + j * r.den(), n * r.den()), level);
    return numtower::make_rational(1, n) * sum;
}

}  // namespace

std::vector<RelationRow> check_relations(i64 level, const std::vector<i64>& ns, const std::vector<QmodZ>& rs,
                                         const RelationOptions& options) {
    Checker c(level, options);
    const std::string lvl = " @N=" + std::to_string(level);

    for (i64 n : ns) {
        const std::string tag = "n=" + std::to_string(n) + lvl;
        c.row("a", "mu_n^* mu_n = 1; " + tag, [&] {
            const AlgebraElement m = c.mu(n);
            return std::pair{involution(m) * m, identity(level)};
        });
        c.row("a", "mu_n mu_n^* = (1/n) sum_{ns=0} e(s); " + tag, [&] {
            const AlgebraElement m = c.mu(n);
            return std::pair{m * involution(m), averaged(n, QmodZ::zero(), c.rhs_level(n))};
        });
    }

    for (i64 m : ns)
        for (i64 n : ns) {
            c.row("b", "mu_m mu_n = mu_mn; m=" + std::to_string(m) + ", n=" + std::to_string(n) + lvl, [&] {
                return std::pair{c.mu(m) * c.mu(n), gen_mu(m * n, c.rhs_level(m * n))};
            });
            c.row("b", "mu_m mu_n = mu_n mu_m; m=" + std::to_string(m) + ", n=" + std::to_string(n) + lvl,
                  [&] { return std::pair{c.mu(m) * c.mu(n), c.mu(n) * c.mu(m)}; });
        }

    c.row("c", "e(0) = 1" + lvl, [&] { return std::pair{c.e(QmodZ::zero()), identity(level)}; });
    for (const QmodZ& r : rs) {
        c.row("c", "e(r)^* = e(-r); r=" + r.str() + lvl, [&] { return std::pair{involution(c.e(r)), c.e(-r)}; });
        for (const QmodZ& s : rs)
            c.row("c", "e(r) e(s) = e(r+s); r=" + r.str() + ", s=" + s.str() + lvl,
                  [&] { return std::pair{c.e(r) * c.e(s), c.e(r + s)}; });
    }

    for (i64 n : ns)
        for (const QmodZ& r : rs)
            c.row("d", "mu_n e(r) mu_n^* = (1/n) sum_{ns=r} e(s); n=" + std::to_string(n) + ", r=" + r.str() + lvl, [&] {
                const AlgebraElement m = c.mu(n);
                return std::pair{m * c.e(r) * involution(m), averaged(n, r, c.rhs_level(n * r.den()))};
            });

    return c.take();
}

bool all_pass(const std::vector<RelationRow>& rows) {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

void to_json(numtower::Json& j, const RelationRow& row) {
    j = numtower::Json{{"relation", row.relation}, {"instance", row.instance}, {"pass", row.pass}};
    if (row.witness.empty())
        j["witness"] = nullptr;
    else
        j["witness"] = row.witness;
}

}  // namespace bcsys::bcalg
