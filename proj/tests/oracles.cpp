#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracles {

namespace {

// Legendre nodes/weights on [-1, 1] by Newton iteration (order 16 is plenty
// for the smooth integrands here once the domain is split into panels).
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss16() {
    static GaussRule rule = [] {
        constexpr int n = 16;
        GaussRule r;
        r.nodes.resize(n);
        r.weights.resize(n);
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (x * p0 - p1) / (x * x - 1.0);
                double dx = p0 / pp;
                x -= dx;
                if (std::fabs(dx) < 1e-15)
                    break;
            }
            r.nodes[i] = -x;
            r.nodes[n - 1 - i] = x;
            r.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
            r.weights[n - 1 - i] = r.weights[i];
        }
        return r;
    }();
    return rule;
}

double t_density(double x, const double* params) {
    double df = params[0];
    double ln = std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0) -
                0.5 * std::log(df * M_PI) -
                (df + 1.0) / 2.0 * std::log1p(x * x / df);
    return std::exp(ln);
}

double f_density(double x, const double* params) {
    double d1 = params[0], d2 = params[1];
    if (x <= 0.0)
        return 0.0;
    double ln = std::lgamma((d1 + d2) / 2.0) - std::lgamma(d1 / 2.0) -
                std::lgamma(d2 / 2.0) + (d1 / 2.0) * std::log(d1 / d2) +
                (d1 / 2.0 - 1.0) * std::log(x) -
                (d1 + d2) / 2.0 * std::log1p(d1 * x / d2);
    return std::exp(ln);
}

// F density under the substitution x = u^2 (integrand f(u^2) * 2u), which is
// bounded at u = 0 for every d1 >= 1.
double f_density_sub(double u, const double* params) {
    return f_density(u * u, params) * 2.0 * u;
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double std_normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

} // namespace

double integrate(double (*f)(double, const double*), const double* params, double a,
                 double b, int panels) {
    const GaussRule& rule = gauss16();
    double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        double mid = lo + 0.5 * h;
        double half = 0.5 * h;
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * f(mid + half * rule.nodes[i], params);
        total += acc * half;
    }
    return total;
}

double t_cdf(double x, double df) {
    double params[1] = {df};
    if (x == 0.0)
        return 0.5;
    double body = integrate(t_density, params, 0.0, std::fabs(x));
    return x > 0.0 ? 0.5 + body : 0.5 - body;
}

double f_cdf(double x, double d1, double d2) {
    if (x <= 0.0)
        return 0.0;
    double params[2] = {d1, d2};
    return integrate(f_density_sub, params, 0.0, std::sqrt(x));
}

double inverse_normal(double p) {
    if (p <= 0.0 || p >= 1.0)
        throw std::invalid_argument("p outside (0,1)");
    double x = 0.0;
    for (int i = 0; i < 200; ++i) {
        double err = std_normal_cdf(x) - p;
        double step = err / std_normal_pdf(x);
        x -= step;
        if (std::fabs(step) < 1e-15)
            break;
    }
    return x;
}

OlsOracle ols_normal_equations(const std::vector<std::vector<double>>& columns,
                               const std::vector<double>& y) {
    std::size_t p = columns.size();
    std::size_t n = y.size();
    if (p == 0 || p > 3)
        throw std::invalid_argument("oracle supports 1..3 parameters");
    for (const auto& c : columns)
        if (c.size() != n)
            throw std::invalid_argument("column length mismatch");

    // XtX and Xty
    double xtx[3][3] = {};
    double xty[3] = {};
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < n; ++r)
                s += columns[i][r] * columns[j][r];
            xtx[i][j] = s;
        }
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r)
            s += columns[i][r] * y[r];
        xty[i] = s;
    }

    // explicit inverse by adjugate
    double inv[3][3] = {};
    if (p == 1) {
        inv[0][0] = 1.0 / xtx[0][0];
    } else if (p == 2) {
        double det = xtx[0][0] * xtx[1][1] - xtx[0][1] * xtx[1][0];
        inv[0][0] = xtx[1][1] / det;
        inv[1][1] = xtx[0][0] / det;
        inv[0][1] = -xtx[0][1] / det;
        inv[1][0] = -xtx[1][0] / det;
    } else {
        double det = xtx[0][0] * (xtx[1][1] * xtx[2][2] - xtx[1][2] * xtx[2][1]) -
                     xtx[0][1] * (xtx[1][0] * xtx[2][2] - xtx[1][2] * xtx[2][0]) +
                     xtx[0][2] * (xtx[1][0] * xtx[2][1] - xtx[1][1] * xtx[2][0]);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
                int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
                // adjugate transposes the cofactor matrix
                inv[j][i] = (xtx[r0][c0] * xtx[r1][c1] - xtx[r0][c1] * xtx[r1][c0]) / det;
            }
    }

    OlsOracle out;
    out.coefficients.resize(p);
    for (std::size_t i = 0; i < p; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < p; ++j)
            s += inv[i][j] * xty[j];
        out.coefficients[i] = s;
    }

    double rss = 0.0, mean_y = 0.0;
    for (double v : y)
        mean_y += v;
    mean_y /= static_cast<double>(n);
    double tss = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        double fitted = 0.0;
        for (std::size_t j = 0; j < p; ++j)
            fitted += out.coefficients[j] * columns[j][r];
        rss += (y[r] - fitted) * (y[r] - fitted);
        tss += (y[r] - mean_y) * (y[r] - mean_y);
    }
    out.rss = rss;
    out.r_squared = tss > 0.0 ? std::clamp(1.0 - rss / tss, 0.0, 1.0) : 0.0;
    out.adj_r_squared = 1.0 - (1.0 - out.r_squared) * static_cast<double>(n - 1) /
                                  static_cast<double>(n - p);

    double sigma2 = rss / static_cast<double>(n - p);
    out.std_errors.resize(p);
    out.t_stats.resize(p);
    out.p_values.resize(p);
    for (std::size_t j = 0; j < p; ++j) {
        out.std_errors[j] = std::sqrt(sigma2 * inv[j][j]);
        out.t_stats[j] = out.coefficients[j] / out.std_errors[j];
        double tail = t_cdf(-std::fabs(out.t_stats[j]), static_cast<double>(n - p));
        out.p_values[j] = std::min(1.0, 2.0 * tail);
    }
    return out;
}

std::vector<double> ccf_full_series(const std::vector<double>& x,
                                    const std::vector<double>& y, int max_lag) {
    int n = static_cast<int>(x.size());
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    std::vector<double> out;
    for (int k = -max_lag; k <= max_lag; ++k) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            int xi = i + k;
            if (xi < 0 || xi >= n)
                continue;
            s += (x[xi] - mx) * (y[i] - my);
        }
        out.push_back(s / (std::sqrt(sxx) * std::sqrt(syy)));
    }
    return out;
}

double pearson_r(const std::vector<double>& x, const std::vector<double>& y) {
    std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / (std::sqrt(sxx) * std::sqrt(syy));
}

std::vector<std::string> simple_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char raw : text) {
        unsigned char c = static_cast<unsigned char>(raw);
        bool word = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
                    (c >= 'A' && c <= 'Z');
        if (word) {
            cur.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c + 32 : c));
        } else if (!cur.empty()) {
            tokens.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty())
        tokens.push_back(cur);
    return tokens;
}

std::size_t simple_phrase_count(const std::string& text, const std::string& phrase) {
    auto t = simple_tokens(text);
    auto p = simple_tokens(phrase);
    if (p.empty() || p.size() > t.size())
        return 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i + p.size() <= t.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (t[i + j] != p[j]) {
                ok = false;
                break;
            }
        if (ok)
            ++count;
    }
    return count;
}

bool simple_contains(const std::string& text, const std::string& phrase) {
    return simple_phrase_count(text, phrase) > 0;
}

std::map<std::string, DayStats> recount(const finsent::Corpus& corpus,
                                        const std::vector<std::string>& lexicon_terms,
                                        const std::vector<std::string>& volume_terms,
                                        const std::string& bull_term,
                                        const std::string& bear_term) {
    std::map<std::string, DayStats> out;
    for (const auto& doc : corpus.documents()) {
        DayStats& day = out[doc.date.iso()];
        ++day.docs;
        auto tokens = simple_tokens(doc.text);
        std::size_t negatives = 0;
        for (const auto& tok : tokens)
            for (const auto& term : lexicon_terms)
                if (tok == term) {
                    ++negatives;
                    break;
                }
        if (!tokens.empty())
            day.ratio_sum += static_cast<double>(negatives) /
                             static_cast<double>(tokens.size());
        if (simple_contains(doc.text, bull_term))
            ++day.bull;
        if (simple_contains(doc.text, bear_term))
            ++day.bear;
        for (const auto& term : volume_terms)
            if (simple_contains(doc.text, term))
                ++day.term_hits[term];
    }
    return out;
}

} // namespace oracles
