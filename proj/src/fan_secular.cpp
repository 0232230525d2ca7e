#include "outerspread/fan_secular.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace osp {

namespace {

struct Pole {
    double mu;
    double c;
};

// Bisection for the single root of f in (lo, hi) where f(lo+) = -inf (or
// f(lo) < 0) and f(hi) > 0, f increasing across the root.
template <typename F>
double bisect_root(F f, double lo, double hi) {
    for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

FanExtremes fan_extremes(const LinearForestSpec& spec) {
    const double pi = std::numbers::pi;
    std::map<int, int> mult;
    for (int p : spec.parts) ++mult[p];

    std::vector<Pole> poles;
    double mu_min_all = 2.0, mu_max_all = -2.0;
    for (const auto& [k, cnt] : mult) {
        for (int j = 1; j <= k; ++j) {
            const double mu = 2.0 * std::cos(j * pi / (k + 1));
            mu_min_all = std::min(mu_min_all, mu);
            mu_max_all = std::max(mu_max_all, mu);
            if (j % 2 == 1) {
                const double ang = j * pi / (2.0 * (k + 1));
                const double cot = std::cos(ang) / std::sin(ang);
                poles.push_back({mu, cnt * 2.0 * cot * cot / (k + 1)});
            }
        }
    }
    std::sort(poles.begin(), poles.end(), [](const Pole& a, const Pole& b) { return a.mu < b.mu; });
    std::vector<Pole> merged;
    for (const Pole& p : poles) {
        if (!merged.empty() && p.mu - merged.back().mu < 1e-13)
            merged.back().c += p.c;
        else
            merged.push_back(p);
    }

    const double n = spec.total_vertices() + 1.0;
    auto f = [&](double lam) {
        double s = lam;
        for (const Pole& p : merged) s -= p.c / (lam - p.mu);
        return s;
    };

    // weights sum to n-1; drift means the closed forms above are wrong
    double csum = 0.0;
    for (const Pole& p : merged) csum += p.c;
    if (std::abs(csum - (n - 1.0)) > 1e-6 * n)
        throw std::logic_error("fan_extremes: hub coupling weights do not sum to n-1");

    // top root sits above every pole (the largest pole is always hub-coupled)
    double hi = std::sqrt(n) + 1.0;
    while (f(hi) <= 0.0) hi *= 2.0;
    const double lambda1 = bisect_root(f, merged.back().mu + 1e-15, hi);

    // bottom root sits below the lowest hub-coupled pole, but an uncoupled
    // path eigenvalue may lie lower still
    double lo = -(std::sqrt(n) + 1.0);
    while (f(lo) >= 0.0) lo *= 2.0;
    const double lambda_bottom = bisect_root(f, lo, merged.front().mu - 1e-15);
    const double lambda_n = std::min(lambda_bottom, mu_min_all);

    return {lambda1, lambda_n};
}

double fan_spread_fast(const LinearForestSpec& spec) {
    const FanExtremes e = fan_extremes(spec);
    return e.lambda1 - e.lambda_n;
}

FanPoleTable build_fan_pole_table(int max_part) {
    if (max_part < 1) throw std::invalid_argument("build_fan_pole_table: need max_part >= 1");
    const double pi = std::numbers::pi;
    FanPoleTable t;
    t.weighted.resize(max_part + 1);
    t.even_min.assign(max_part + 1, 2.0);
    for (int k = 1; k <= max_part; ++k) {
        double csum = 0.0;
        for (int j = 1; j <= k; j += 2) {
            const double mu = 2.0 * std::cos(j * pi / (k + 1));
            const double ang = j * pi / (2.0 * (k + 1));
            const double cot = std::cos(ang) / std::sin(ang);
            const double c = 2.0 * cot * cot / (k + 1);
            t.weighted[k].push_back({mu, c});
            csum += c;
        }
        const int je = (k % 2 == 0) ? k : k - 1;
        if (je >= 2) t.even_min[k] = 2.0 * std::cos(je * pi / (k + 1));
        if (std::abs(csum - k) > 1e-9 * k)
            throw std::logic_error("build_fan_pole_table: weights do not sum to k");
    }
    return t;
}

FanExtremes fan_extremes_tabulated(const FanPoleTable& table, const int* parts, int count) {
    if (count < 1) throw std::invalid_argument("fan_extremes_tabulated: empty partition");
    long long total = 0;
    for (int i = 0; i < count; ++i) {
        if (parts[i] < 1 || parts[i] > table.max_part())
            throw std::invalid_argument("fan_extremes_tabulated: part outside table");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("fan_extremes_tabulated: parts must be descending");
        total += parts[i];
    }

    auto generic = [&] {
        return fan_extremes(LinearForestSpec(std::vector<int>(parts, parts + count)));
    };
    // bottom Newton start at -2 needs lambda_n < -2, guaranteed once
    // total >= 11 (Rayleigh: lambda_n <= -sqrt(total) + 1)
    if (total < 11) return generic();

    const double sqrt_total = std::sqrt(static_cast<double>(total));
    double mu_max = -2.0, even_min = 2.0;
    for (int i = 0; i < count;) {
        const int s = parts[i];
        while (i < count && parts[i] == s) ++i;
        mu_max = std::max(mu_max, table.weighted[s].front().mu);
        even_min = std::min(even_min, table.even_min[s]);
    }

    auto eval = [&](double lam, double& f, double& fp) {
        f = lam;
        fp = 1.0;
        for (int i = 0; i < count;) {
            const int s = parts[i];
            int mult = 1;
            while (i + mult < count && parts[i + mult] == s) ++mult;
            for (const FanPoleTable::Pole& p : table.weighted[s]) {
                const double d = lam - p.mu;
                const double q = mult * p.c / d;
                f -= q;
                fp += q / d;
            }
            i += mult;
        }
    };

    // f is concave and increasing above all poles: Newton from the left
    // (start sqrt(total) <= lambda1) climbs monotonically to the top root
    double top = sqrt_total;
    {
        bool ok = false;
        for (int it = 0; it < 80; ++it) {
            double f, fp;
            eval(top, f, fp);
            const double next = top - f / fp;
            if (!(next > mu_max) || !(next < sqrt_total + 3.0)) break;
            const bool done = std::abs(next - top) <= 1e-13 * std::max(1.0, next);
            top = next;
            if (done) {
                ok = true;
                break;
            }
        }
        if (!ok) return generic();
    }

    // below all poles f is convex and increasing: Newton from the right
    // (start -2 > bottom root) descends monotonically
    double bottom = -2.0;
    {
        bool ok = false;
        for (int it = 0; it < 80; ++it) {
            double f, fp;
            eval(bottom, f, fp);
            const double next = bottom - f / fp;
            if (!(next > -sqrt_total - 3.0) || !(next < -1.0)) break;
            const bool done = std::abs(next - bottom) <= 1e-13 * std::max(1.0, std::abs(next));
            bottom = next;
            if (done) {
                ok = true;
                break;
            }
        }
        if (!ok) return generic();
    }

    return {top, std::min(bottom, even_min)};
}

}  // namespace osp
