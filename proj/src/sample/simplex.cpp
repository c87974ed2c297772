#include "birkhoff/simplex.hpp"

#include <optional>
#include <stdexcept>

namespace birkhoff::lp {

namespace {

// Degenerate pivots tolerated under the steepest rule before switching to Bland.
constexpr std::size_t kStallLimit = 50;

class Tableau {
public:
    Tableau(const StandardFormLp& lp) : rows_(lp.b.size()), vars_(lp.c.size()) {
        cols_ = vars_ + rows_;
        t_.assign(rows_, std::vector<Rational>(cols_ + 1, Rational(0)));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (lp.a[i].size() != vars_) {
                throw std::invalid_argument("constraint row has the wrong length");
            }
            if (sgn(lp.b[i]) < 0) {
                throw std::invalid_argument("standard form needs b >= 0");
            }
            for (std::size_t j = 0; j < vars_; ++j) {
                t_[i][j] = lp.a[i][j];
            }
            t_[i][vars_ + i] = 1;
            t_[i][cols_] = lp.b[i];
            basis_.push_back(vars_ + i);
        }
        allowed_.assign(cols_, 1);
    }

    /// Loads reduced costs for maximizing `cost` (length cols_) over the current basis.
    void set_objective(const std::vector<Rational>& cost) {
        cost_ = cost;
        obj_.assign(cols_ + 1, Rational(0));
        for (std::size_t j = 0; j <= cols_; ++j) {
            Rational z = 0;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (sgn(cost_[basis_[i]]) != 0 && sgn(t_[i][j]) != 0) {
                    z += cost_[basis_[i]] * t_[i][j];
                }
            }
            obj_[j] = j < cols_ ? z - cost_[j] : z;
        }
    }

    void optimize() {
        std::size_t stalled = 0;
        while (true) {
            const bool bland = stalled >= kStallLimit;
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!allowed_[j] || sgn(obj_[j]) >= 0) {
                    continue;
                }
                if (!enter || obj_[j] < obj_[*enter]) {
                    enter = j;
                }
                if (bland) {
                    break;
                }
            }
            if (!enter) {
                return;
            }
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (sgn(t_[i][*enter]) <= 0) {
                    continue;
                }
                Rational ratio = t_[i][cols_] / t_[i][*enter];
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) {
                throw std::domain_error("linear program is unbounded");
            }
            stalled = sgn(best) == 0 ? stalled + 1 : 0;
            pivot(*leave, *enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        ++pivots_;
        auto& pr = t_[row];
        const Rational inv = 1 / pr[col];
        for (auto& v : pr) {
            if (sgn(v) != 0) {
                v *= inv;
            }
        }
        auto eliminate = [&](std::vector<Rational>& target) {
            const Rational factor = target[col];
            if (sgn(factor) == 0) {
                return;
            }
            for (std::size_t j = 0; j <= cols_; ++j) {
                if (sgn(pr[j]) != 0) {
                    target[j] -= factor * pr[j];
                }
            }
        };
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i != row) {
                eliminate(t_[i]);
            }
        }
        eliminate(obj_);
        basis_[row] = col;
    }

    /// Pivots zero-valued artificials out of the basis; drops rows where none can leave.
    void remove_artificials() {
        for (std::size_t i = 0; i < rows_;) {
            if (basis_[i] < vars_) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < vars_ && !col; ++j) {
                if (sgn(t_[i][j]) != 0) {
                    col = j;
                }
            }
            if (col) {
                pivot(i, *col);
                ++i;
            } else {
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --rows_;
            }
        }
        for (std::size_t j = vars_; j < cols_; ++j) {
            allowed_[j] = 0;
        }
    }

    const Rational& value() const { return obj_[cols_]; }

    LpSolution solution() const {
        LpSolution s;
        s.x.assign(vars_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (basis_[i] < vars_) {
                s.x[basis_[i]] = t_[i][cols_];
            }
            s.basis.push_back(basis_[i]);
        }
        s.value = obj_[cols_];
        s.pivots = pivots_;
        return s;
    }

    std::size_t vars() const { return vars_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_;
    std::size_t vars_;
    std::size_t cols_ = 0;
    std::vector<std::vector<Rational>> t_;
    std::vector<Rational> obj_;
    std::vector<Rational> cost_;
    std::vector<std::size_t> basis_;
    std::vector<char> allowed_;
    std::size_t pivots_ = 0;
};

}  // namespace

LpSolution solve(const StandardFormLp& lp) {
    if (lp.a.size() != lp.b.size()) {
        throw std::invalid_argument("A and b disagree on the number of rows");
    }
    Tableau tab(lp);
    std::vector<Rational> phase1(tab.cols(), Rational(0));
    for (std::size_t j = tab.vars(); j < tab.cols(); ++j) {
        phase1[j] = -1;
    }
    tab.set_objective(phase1);
    tab.optimize();
    if (sgn(tab.value()) != 0) {
        throw std::domain_error("linear program is infeasible");
    }
    tab.remove_artificials();
    std::vector<Rational> phase2(tab.cols(), Rational(0));
    for (std::size_t j = 0; j < tab.vars(); ++j) {
        phase2[j] = lp.c[j];
    }
    tab.set_objective(phase2);
    tab.optimize();
    return tab.solution();
}

}  // namespace birkhoff::lp
