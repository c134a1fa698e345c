#include "cframe/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cframe/errors.hpp"

namespace cframe {

MeasureSpace::MeasureSpace(std::vector<std::vector<double>> points, std::vector<double> weights) {
    if (weights.empty()) throw InvalidDomain("measure space needs at least one point");
    if (points.size() != weights.size())
        throw ShapeError("measure space: " + std::to_string(points.size()) + " points but " +
                         std::to_string(weights.size()) + " weights");
    double mass = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || !(w > 0.0))
            throw InvalidDomain("measure space weights must be finite and positive");
        mass += w;
    }
    for (const auto& p : points)
        for (double x : p)
            if (!std::isfinite(x)) throw InvalidDomain("measure space point has non-finite coordinate");
    if (!std::isfinite(mass)) throw InvalidDomain("measure space total mass is not finite");

    auto data = std::make_shared<Data>();
    data->points = std::move(points);
    data->weights = std::move(weights);
    data->total_mass = mass;
    data_ = std::move(data);
}

bool MeasureSpace::same_as(const MeasureSpace& other) const noexcept {
    if (data_ == other.data_) return true;
    return data_->weights == other.data_->weights && data_->points == other.data_->points;
}

Symbol::Symbol(MeasureSpace space, std::vector<Complex> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (values_.size() != space_.size())
        throw ShapeError("symbol length " + std::to_string(values_.size()) +
                         " does not match space size " + std::to_string(space_.size()));
    for (const auto& v : values_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw InvalidSymbol("symbol values must be finite");
}

Symbol Symbol::constant(const MeasureSpace& space, Complex value) {
    return Symbol(space, std::vector<Complex>(space.size(), value));
}

Symbol Symbol::real(const MeasureSpace& space, std::span<const double> values) {
    return Symbol(space, std::vector<Complex>(values.begin(), values.end()));
}

Symbol Symbol::conj() const {
    std::vector<Complex> out(values_.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::conj(values_[j]);
    return Symbol(space_, std::move(out));
}

namespace {

void require_same_space(const Symbol& a, const Symbol& b) {
    if (!a.space().same_as(b.space())) throw ShapeError("symbols live on different measure spaces");
}

}  // namespace

Symbol Symbol::operator-(const Symbol& rhs) const {
    require_same_space(*this, rhs);
    std::vector<Complex> out(values_.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = values_[j] - rhs.values_[j];
    return Symbol(space_, std::move(out));
}

Symbol Symbol::operator+(const Symbol& rhs) const {
    require_same_space(*this, rhs);
    std::vector<Complex> out(values_.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = values_[j] + rhs.values_[j];
    return Symbol(space_, std::move(out));
}

Symbol Symbol::operator*(Complex scale) const {
    std::vector<Complex> out(values_.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = scale * values_[j];
    return Symbol(space_, std::move(out));
}

MeasureSpace uniform_grid_1d(double a, double b, std::size_t n) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b) || n == 0)
        throw InvalidDomain("uniform_grid_1d requires finite a < b and n >= 1");
    const double h = (b - a) / static_cast<double>(n);
    std::vector<std::vector<double>> points(n);
    for (std::size_t j = 0; j < n; ++j) points[j] = {a + (static_cast<double>(j) + 0.5) * h};
    return MeasureSpace(std::move(points), std::vector<double>(n, h));
}

namespace {

struct LogCells {
    std::vector<double> mid;
    std::vector<double> width;
};

LogCells log_cells(double a, double b, std::size_t n) {
    LogCells cells;
    cells.mid.resize(n);
    cells.width.resize(n);
    const double step = std::log(b / a) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = a * std::exp(step * static_cast<double>(i));
        const double hi = (i + 1 == n) ? b : a * std::exp(step * static_cast<double>(i + 1));
        cells.mid[i] = std::sqrt(lo * hi);
        cells.width[i] = hi - lo;
    }
    return cells;
}

}  // namespace

MeasureSpace log_grid_1d(double a, double b, std::size_t n) {
    if (!(a > 0.0) || !(a < b) || !std::isfinite(b) || n == 0)
        throw InvalidDomain("log_grid_1d requires 0 < a < b and n >= 1");
    auto cells = log_cells(a, b, n);
    std::vector<std::vector<double>> points(n);
    for (std::size_t i = 0; i < n; ++i) points[i] = {cells.mid[i]};
    return MeasureSpace(std::move(points), std::move(cells.width));
}

MeasureSpace product_grid_2d(double ax, double bx, std::size_t nx,
                             double ay, double by, std::size_t ny) {
    if (!(ax < bx) || !(ay < by) || nx == 0 || ny == 0 || !std::isfinite(ax) ||
        !std::isfinite(bx) || !std::isfinite(ay) || !std::isfinite(by))
        throw InvalidDomain("product_grid_2d requires non-degenerate intervals and positive counts");
    const double hx = (bx - ax) / static_cast<double>(nx);
    const double hy = (by - ay) / static_cast<double>(ny);
    std::vector<std::vector<double>> points;
    points.reserve(nx * ny);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t k = 0; k < ny; ++k)
            points.push_back({ax + (static_cast<double>(i) + 0.5) * hx,
                              ay + (static_cast<double>(k) + 0.5) * hy});
    return MeasureSpace(std::move(points), std::vector<double>(nx * ny, hx * hy));
}

MeasureSpace wavelet_grid(double a_min, double a_max, std::size_t n_a,
                          double b_min, double b_max, std::size_t n_b) {
    if (!(a_min > 0.0)) throw InvalidDomain("wavelet_grid requires a_min > 0");
    if (!(a_min < a_max) || !std::isfinite(a_max) || n_a == 0)
        throw InvalidDomain("wavelet_grid requires a_min < a_max and n_a >= 1");
    if (!(b_min < b_max) || !std::isfinite(b_min) || !std::isfinite(b_max) || n_b == 0)
        throw InvalidDomain("wavelet_grid requires b_min < b_max and n_b >= 1");

    const auto cells = log_cells(a_min, a_max, n_a);
    const double db = (b_max - b_min) / static_cast<double>(n_b);
    std::vector<std::vector<double>> points;
    std::vector<double> weights;
    points.reserve(n_a * n_b);
    weights.reserve(n_a * n_b);
    for (std::size_t i = 0; i < n_a; ++i) {
        const double a = cells.mid[i];
        const double w = cells.width[i] * db / (a * a);
        for (std::size_t k = 0; k < n_b; ++k) {
            points.push_back({a, b_min + (static_cast<double>(k) + 0.5) * db});
            weights.push_back(w);
        }
    }
    return MeasureSpace(std::move(points), std::move(weights));
}

MeasureSpace counting_space(std::size_t n) {
    if (n == 0) throw InvalidDomain("counting_space requires n >= 1");
    std::vector<std::vector<double>> points(n);
    for (std::size_t j = 0; j < n; ++j) points[j] = {static_cast<double>(j)};
    return MeasureSpace(std::move(points), std::vector<double>(n, 1.0));
}

Complex integrate(const MeasureSpace& space, std::span<const Complex> samples) {
    if (samples.size() != space.size())
        throw ShapeError("integrate: " + std::to_string(samples.size()) + " samples on a space of " +
                         std::to_string(space.size()) + " points");
    Complex acc{0.0, 0.0};
    const auto& w = space.weights();
    for (std::size_t j = 0; j < samples.size(); ++j) acc += w[j] * samples[j];
    return acc;
}

double lp_norm(const Symbol& m, double p) {
    if (std::isnan(p) || p < 1.0) throw InvalidParameter("lp_norm requires p >= 1");
    if (std::isinf(p)) {
        double best = 0.0;
        for (const auto& v : m.values()) best = std::max(best, std::abs(v));
        return best;
    }
    const auto& w = m.space().weights();
    // Scale by the max to avoid overflow for large p.
    double scale = 0.0;
    for (const auto& v : m.values()) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return 0.0;
    double acc = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j) acc += w[j] * std::pow(std::abs(m[j]) / scale, p);
    return scale * std::pow(acc, 1.0 / p);
}

std::vector<std::vector<std::size_t>> partition(const MeasureSpace& space, std::size_t k) {
    const std::size_t n = space.size();
    if (k == 0) throw InvalidParameter("partition requires k >= 1");
    if (k > n)
        throw InfeasiblePartition("cannot split " + std::to_string(n) + " points into " +
                                  std::to_string(k) + " nonempty parts");
    std::vector<std::vector<std::size_t>> parts(k);
    const std::size_t base = n / k;
    const std::size_t extra = n % k;
    std::size_t next = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t len = base + (i < extra ? 1 : 0);
        parts[i].reserve(len);
        for (std::size_t t = 0; t < len; ++t) parts[i].push_back(next++);
    }
    return parts;
}

}  // namespace cframe
