#include "braceforge/ybe.hpp"

#include <algorithm>
#include <numeric>

namespace braceforge {

namespace {

bool permutation_row(const std::vector<Elt>& flat, int n, Elt row) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Elt i = 0; i < n; ++i) {
        const Elt v = flat[static_cast<std::size_t>(row) * n + i];
        if (v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

// r as a permutation of pair codes x*n + y.
std::vector<long> pair_permutation(const Solution& s) {
    const int n = s.n;
    std::vector<long> p(static_cast<std::size_t>(n) * n);
    for (Elt x = 0; x < n; ++x)
        for (Elt y = 0; y < n; ++y) {
            const auto [u, v] = s.r(x, y);
            p[static_cast<std::size_t>(x) * n + y] = static_cast<long>(u) * n + v;
        }
    return p;
}

struct Triple {
    Elt x, y, z;
};

Triple apply12(const Solution& s, Triple t) {
    const auto [u, v] = s.r(t.x, t.y);
    return {u, v, t.z};
}

Triple apply23(const Solution& s, Triple t) {
    const auto [u, v] = s.r(t.y, t.z);
    return {t.x, u, v};
}

}  // namespace

void verify_solution(const Solution& s) {
    const int n = s.n;
    const std::size_t cells = static_cast<std::size_t>(n) * n;
    if (n < 1 || s.sigma.size() != cells || s.tau.size() != cells)
        throw ValidationError("solution tables do not match the point count");
    for (Elt x = 0; x < n; ++x)
        if (!permutation_row(s.sigma, n, x)) throw DegenerateMap("sigma", x);
    for (Elt y = 0; y < n; ++y)
        if (!permutation_row(s.tau, n, y)) throw DegenerateMap("tau", y);

    std::vector<bool> hit(cells, false);
    for (const long code : pair_permutation(s)) {
        if (hit[static_cast<std::size_t>(code)])
            throw ValidationError("r is not a bijection on pairs");
        hit[static_cast<std::size_t>(code)] = true;
    }

    for (Elt x = 0; x < n; ++x)
        for (Elt y = 0; y < n; ++y)
            for (Elt z = 0; z < n; ++z) {
                const Triple t{x, y, z};
                const Triple lhs = apply12(s, apply23(s, apply12(s, t)));
                const Triple rhs = apply23(s, apply12(s, apply23(s, t)));
                if (lhs.x != rhs.x || lhs.y != rhs.y || lhs.z != rhs.z)
                    throw BraidFailure(x, y, z);
            }
}

bool is_involutive(const Solution& s) {
    for (Elt x = 0; x < s.n; ++x)
        for (Elt y = 0; y < s.n; ++y) {
            const auto [u, v] = s.r(x, y);
            if (s.r(u, v) != std::pair<Elt, Elt>{x, y}) return false;
        }
    return true;
}

Solution solution_from_brace(const SkewBrace& b) {
    const int n = b.size();
    Solution s;
    s.n = n;
    s.sigma.resize(static_cast<std::size_t>(n) * n);
    s.tau.resize(static_cast<std::size_t>(n) * n);
    for (Elt x = 0; x < n; ++x)
        for (Elt y = 0; y < n; ++y) {
            const Elt u = b.lambda(x, y);
            const Elt v = b.mu(y, x);
            s.sigma[static_cast<std::size_t>(x) * n + y] = u;
            s.tau[static_cast<std::size_t>(y) * n + x] = v;

            // r keeps the circle product of the pair
            const Elt xy = b.mul.op(x, y);
            if (b.mul.op(u, v) != xy)
                throw ValidationError("canonical solution drops the circle product at (" +
                                      std::to_string(x) + ", " + std::to_string(y) + ")");
            // and mu agrees with its conjugation form
            const Elt conj = b.add.op(b.add.op(b.add.inv[xy], x), xy);
            if (b.lambda_inv(u, conj) != v)
                throw ValidationError("the two mu forms disagree at (" + std::to_string(x) +
                                      ", " + std::to_string(y) + ")");
        }
    return s;
}

long long solution_order(const Solution& s) {
    const auto p = pair_permutation(s);
    std::vector<bool> seen(p.size(), false);
    long long order = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        long long len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        order = std::lcm(order, len);
        if (order > (1LL << 60)) throw ResourceError("solution order overflows the counter");
    }
    return order;
}

int brace_depth(const SkewBrace& b) {
    const GroupFacts facts = structure_queries(b.add);
    const Quotient q = quotient(b.add, Subgroup{facts.center});
    return structure_queries(q.group).exponent;
}

std::optional<std::vector<Elt>> biquandle_map(const Solution& s) {
    const int n = s.n;
    // candidate images per point: t with r(t, x) = (t, x)
    std::vector<std::vector<Elt>> options(static_cast<std::size_t>(n));
    for (Elt x = 0; x < n; ++x)
        for (Elt t = 0; t < n; ++t)
            if (s.r(t, x) == std::pair<Elt, Elt>{t, x}) options[x].push_back(t);

    std::vector<Elt> map(static_cast<std::size_t>(n), kNoElt);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto assign = [&](auto&& self, Elt x) -> bool {
        if (x == n) return true;
        for (const Elt t : options[x]) {
            if (used[t]) continue;
            used[t] = true;
            map[x] = t;
            if (self(self, static_cast<Elt>(x + 1))) return true;
            used[t] = false;
        }
        return false;
    };
    if (!assign(assign, 0)) return std::nullopt;
    return map;
}

bool is_biquandle(const Solution& s) { return biquandle_map(s).has_value(); }

Solution restrict_solution(const Solution& s, const std::vector<Elt>& subset) {
    std::vector<Elt> pts = subset;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int k = static_cast<int>(pts.size());
    std::vector<int> pos(static_cast<std::size_t>(s.n), -1);
    for (int i = 0; i < k; ++i) pos[pts[static_cast<std::size_t>(i)]] = i;

    Solution out;
    out.n = k;
    out.sigma.resize(static_cast<std::size_t>(k) * k);
    out.tau.resize(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const auto [u, v] = s.r(pts[static_cast<std::size_t>(i)],
                                    pts[static_cast<std::size_t>(j)]);
            if (pos[u] < 0 || pos[v] < 0)
                throw ValidationError("subset is not closed under the solution at (" +
                                      std::to_string(pts[static_cast<std::size_t>(i)]) + ", " +
                                      std::to_string(pts[static_cast<std::size_t>(j)]) + ")");
            out.sigma[static_cast<std::size_t>(i) * k + j] = static_cast<Elt>(pos[u]);
            out.tau[static_cast<std::size_t>(j) * k + i] = static_cast<Elt>(pos[v]);
        }
    return out;
}

Solution inverse_solution(const Solution& s) {
    const std::size_t pairs = static_cast<std::size_t>(s.n) * s.n;
    Solution out;
    out.n = s.n;
    out.sigma.assign(pairs, kNoElt);
    out.tau.assign(pairs, kNoElt);
    for (Elt x = 0; x < s.n; ++x)
        for (Elt y = 0; y < s.n; ++y) {
            const auto [u, v] = s.r(x, y);
            const std::size_t su = static_cast<std::size_t>(u) * s.n + v;
            const std::size_t tv = static_cast<std::size_t>(v) * s.n + u;
            if (out.sigma[su] != kNoElt || out.tau[tv] != kNoElt)
                throw ValidationError("r is not a bijection on pairs");
            out.sigma[su] = x;
            out.tau[tv] = y;
        }
    return out;
}

namespace {

// Backtracking point-map search: assigning an image triggers a propagation
// pass that derives the forced images of sigma_x(y) and tau_y(x) for every
// assigned pair, failing fast on conflicts.
struct SolutionMatcher {
    const Solution& a;
    const Solution& b;
    const int n;
    std::vector<Elt> map;
    std::vector<bool> used;

    SolutionMatcher(const Solution& a_, const Solution& b_)
        : a(a_), b(b_), n(a_.n), map(static_cast<std::size_t>(n), kNoElt),
          used(static_cast<std::size_t>(n), false) {}

    bool propagate(std::vector<Elt>& log, Elt start) {
        std::vector<Elt> queue{start};
        while (!queue.empty()) {
            const Elt x = queue.back();
            queue.pop_back();
            for (Elt y = 0; y < n; ++y) {
                if (map[y] == kNoElt) continue;
                for (const bool xFirst : {true, false}) {
                    const auto [u, v] = xFirst ? a.r(x, y) : a.r(y, x);
                    const auto [pu, pv] = xFirst ? b.r(map[x], map[y]) : b.r(map[y], map[x]);
                    for (const auto& [src, dst] :
                         {std::pair<Elt, Elt>{u, pu}, std::pair<Elt, Elt>{v, pv}}) {
                        if (map[src] == kNoElt) {
                            if (used[dst]) return false;
                            map[src] = dst;
                            used[dst] = true;
                            log.push_back(src);
                            queue.push_back(src);
                        } else if (map[src] != dst) {
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    }

    void undo(const std::vector<Elt>& log) {
        for (const Elt src : log) {
            used[map[src]] = false;
            map[src] = kNoElt;
        }
    }

    bool descend() {
        Elt x = 0;
        while (x < n && map[x] != kNoElt) ++x;
        if (x == n) return true;
        for (Elt v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::vector<Elt> log{x};
            map[x] = v;
            used[v] = true;
            if (propagate(log, x) && descend()) return true;
            undo(log);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Elt>> solution_isomorphism(const Solution& s, const Solution& t) {
    if (s.n != t.n) return std::nullopt;
    SolutionMatcher m(s, t);
    if (!m.descend()) return std::nullopt;
    return m.map;
}

}  // namespace braceforge
