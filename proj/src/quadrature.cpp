#include "rosym/quadrature.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rosym/detail/gauss.hpp"

namespace rosym {

VecN SphereRule::node_vec(int i) const {
    VecN v = VecN::zero(dim);
    const double* p = node(i);
    for (int k = 0; k < dim; ++k) v[k] = p[k];
    return v;
}

double SphereRule::total_measure() const {
    double half_n = 0.5 * dim;
    return dim * std::pow(kPi, half_n) / std::tgamma(half_n + 1.0);
}

namespace {

void normalize_rule(SphereRule& rule) {
    for (int i = 0; i < rule.count(); ++i) {
        double* p = rule.nodes.data() + static_cast<size_t>(i) * rule.dim;
        double nrm = 0;
        for (int k = 0; k < rule.dim; ++k) nrm += p[k] * p[k];
        nrm = std::sqrt(nrm);
        for (int k = 0; k < rule.dim; ++k) p[k] /= nrm;
    }
    KahanSum sum;
    for (double w : rule.weights) sum.add(w);
    double scale = rule.total_measure() / sum.value();
    for (double& w : rule.weights) w *= scale;
}

}  // namespace

SphereRule product_rule(int n, int level) {
    if (n < 2) throw std::invalid_argument("product_rule: n must be >= 2");
    if (n > 8) throw std::invalid_argument("product_rule: n > 8 not supported, use monte_carlo_rule");
    if (level < 1) throw std::invalid_argument("product_rule: level must be >= 1");

    SphereRule rule;
    rule.dim = n;
    rule.kind = RuleKind::ProductGauss;
    rule.exact_degree = 2 * level - 1;

    // Polar angles theta_1..theta_{n-2} carry weights sin^{n-1-i}(theta_i).
    // With t = cos(theta) each becomes a Gauss-Gegenbauer rule for
    // (1-t^2)^{(p-1)/2}; the azimuth is a uniform rule on [0, 2*pi).
    std::vector<std::vector<double>> tx(static_cast<size_t>(n - 2)), tw(static_cast<size_t>(n - 2));
    for (int i = 0; i < n - 2; ++i) {
        int p = n - 1 - (i + 1);  // sin exponent for angle i (1-based formula)
        auto [x, w] = detail::gauss_gegenbauer(level, (p - 1) / 2.0);
        tx[static_cast<size_t>(i)] = std::move(x);
        tw[static_cast<size_t>(i)] = std::move(w);
    }
    int azimuth_count = 2 * level;

    std::vector<int> idx(static_cast<size_t>(n - 2), 0);
    std::vector<double> node(static_cast<size_t>(n));
    bool done = false;
    while (!done) {
        double wpolar = 1.0;
        double sinprod = 1.0;
        for (int i = 0; i < n - 2; ++i) {
            node[static_cast<size_t>(i)] = sinprod * tx[static_cast<size_t>(i)][static_cast<size_t>(idx[static_cast<size_t>(i)])];
            double t = tx[static_cast<size_t>(i)][static_cast<size_t>(idx[static_cast<size_t>(i)])];
            wpolar *= tw[static_cast<size_t>(i)][static_cast<size_t>(idx[static_cast<size_t>(i)])];
            sinprod *= std::sqrt(std::max(0.0, 1.0 - t * t));
        }
        for (int j = 0; j < azimuth_count; ++j) {
            double th = 2.0 * kPi * j / azimuth_count;
            node[static_cast<size_t>(n - 2)] = sinprod * std::cos(th);
            node[static_cast<size_t>(n - 1)] = sinprod * std::sin(th);
            rule.nodes.insert(rule.nodes.end(), node.begin(), node.end());
            rule.weights.push_back(wpolar * 2.0 * kPi / azimuth_count);
        }
        done = true;
        for (int i = n - 3; i >= 0; --i) {
            if (++idx[static_cast<size_t>(i)] < level) {
                done = false;
                break;
            }
            idx[static_cast<size_t>(i)] = 0;
        }
        if (n == 2) break;
    }

    normalize_rule(rule);
    return rule;
}

SphereRule monte_carlo_rule(int n, int N, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("monte_carlo_rule: n must be >= 2");
    if (n > kMaxDim) throw std::invalid_argument("monte_carlo_rule: n must be <= 16");
    if (N < 1000) throw std::invalid_argument("monte_carlo_rule: N must be >= 1000");

    SphereRule rule;
    rule.dim = n;
    rule.kind = RuleKind::MonteCarlo;
    rule.seed = seed;
    rule.nodes.resize(static_cast<size_t>(N) * n);
    rule.weights.assign(static_cast<size_t>(N), 1.0);

    Rng rng(seed);
    for (int i = 0; i < N; ++i) {
        double* p = rule.nodes.data() + static_cast<size_t>(i) * n;
        double nrm = 0;
        do {
            nrm = 0;
            for (int k = 0; k < n; ++k) {
                p[k] = rng.next_gaussian();
                nrm += p[k] * p[k];
            }
        } while (nrm == 0.0);
    }

    normalize_rule(rule);
    return rule;
}

IntegralResult integrate(const SphereRule& rule, const std::function<double(const double*)>& f) {
    KahanSum sum;
    KahanSum plain;   // unweighted sum of f, for the Monte Carlo variance
    KahanSum plain2;  // unweighted sum of f^2
    bool mc = rule.kind == RuleKind::MonteCarlo;
    for (int i = 0; i < rule.count(); ++i) {
        double fi = f(rule.node(i));
        if (!std::isfinite(fi))
            throw NonFiniteIntegrand("integrate: non-finite integrand at node " + std::to_string(i));
        sum.add(rule.weights[static_cast<size_t>(i)] * fi);
        if (mc) {
            plain.add(fi);
            plain2.add(fi * fi);
        }
    }
    IntegralResult res;
    res.value = sum.value();
    if (mc) {
        double N = rule.count();
        double mean = plain.value() / N;
        double var = std::max(0.0, (plain2.value() - N * mean * mean) / (N - 1.0));
        res.stderr_ = rule.total_measure() * std::sqrt(var / N);
    }
    return res;
}

namespace {

void write_double(std::ostream& os, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    os.write(buf, ptr - buf);
}

}  // namespace

void save_rule(const SphereRule& rule, std::ostream& os) {
    os << "sphere-rule dim=" << rule.dim << " kind="
       << (rule.kind == RuleKind::ProductGauss ? "product-gauss" : "monte-carlo")
       << " count=" << rule.count();
    if (rule.exact_degree) os << " exact_degree=" << *rule.exact_degree;
    if (rule.seed) os << " seed=" << *rule.seed;
    os << "\n";
    for (int i = 0; i < rule.count(); ++i) {
        const double* p = rule.node(i);
        for (int k = 0; k < rule.dim; ++k) {
            write_double(os, p[k]);
            os << ' ';
        }
        write_double(os, rule.weights[static_cast<size_t>(i)]);
        os << '\n';
    }
}

SphereRule load_rule(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::invalid_argument("load_rule: empty input");
    SphereRule rule;
    int count = 0;
    {
        std::istringstream hs(header);
        std::string tag;
        hs >> tag;
        if (tag != "sphere-rule") throw std::invalid_argument("load_rule: bad header");
        std::string kv;
        while (hs >> kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("load_rule: bad header field");
            std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
            if (key == "dim") rule.dim = std::stoi(val);
            else if (key == "count") count = std::stoi(val);
            else if (key == "kind") rule.kind = val == "monte-carlo" ? RuleKind::MonteCarlo : RuleKind::ProductGauss;
            else if (key == "exact_degree") rule.exact_degree = std::stoi(val);
            else if (key == "seed") rule.seed = std::stoull(val);
        }
    }
    if (rule.dim < 2 || count <= 0) throw std::invalid_argument("load_rule: bad dimensions");
    rule.nodes.reserve(static_cast<size_t>(count) * rule.dim);
    rule.weights.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        double w = 0;
        for (int k = 0; k < rule.dim; ++k) {
            double x;
            if (!(is >> x)) throw std::invalid_argument("load_rule: truncated node data");
            rule.nodes.push_back(x);
        }
        if (!(is >> w)) throw std::invalid_argument("load_rule: truncated weight data");
        rule.weights.push_back(w);
    }
    return rule;
}

}  // namespace rosym
