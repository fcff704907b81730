#include "berncert/bernstein.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace berncert {

Box Box::unit_cube(std::size_t dim) {
    Box b;
    b.iv.assign(dim, {Rational(0), Rational(1)});
    return b;
}

std::string box_str(const Box& b) {
    std::ostringstream os;
    for (std::size_t k = 0; k < b.iv.size(); ++k) {
        if (k) os << " x ";
        os << "[" << rat_str(b.iv[k].first) << ", " << rat_str(b.iv[k].second) << "]";
    }
    return os.str();
}

const Rational& BernsteinTensor::at(const std::vector<int>& idx) const {
    if (idx.size() != degrees.size()) throw std::invalid_argument("BernsteinTensor: index arity");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 0 || idx[k] > degrees[k])
            throw std::out_of_range("BernsteinTensor: index outside degree");
        flat = flat * (static_cast<std::size_t>(degrees[k]) + 1) + static_cast<std::size_t>(idx[k]);
    }
    return beta[flat];
}

namespace {

std::atomic<int> g_workers{0};  // 0 = unset, consult environment

int env_workers() {
    if (const char* s = std::getenv("BERNCERT_WORKERS")) {
        const int v = std::atoi(s);
        if (v >= 1) return v;
    }
    return 0;
}

std::vector<std::vector<Integer>> pascal_triangle(int up_to) {
    std::vector<std::vector<Integer>> table{{Integer(1)}};
    for (int n = 1; n <= up_to; ++n) {
        const auto& prev = table.back();
        std::vector<Integer> row(static_cast<std::size_t>(n) + 1, Integer(1));
        for (int r = 1; r < n; ++r)
            row[static_cast<std::size_t>(r)] = prev[static_cast<std::size_t>(r) - 1] +
                                               prev[static_cast<std::size_t>(r)];
        table.push_back(std::move(row));
    }
    return table;
}

// Unit-cube lower-triangular axis matrix: M[i][r] = C(i,r)/C(N,r), r <= i.
// Cached per degree behind a mutex; callers take a copy so concurrent growth
// of the cache never invalidates a matrix in use.
std::vector<std::vector<Rational>> axis_matrix(int N) {
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<Rational>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    const auto binom = pascal_triangle(N);
    std::vector<std::vector<Rational>> M(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) {
        auto& row = M[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(i) + 1, Rational(0));
        for (int r = 0; r <= i; ++r)
            row[static_cast<std::size_t>(r)] =
                Rational(binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)],
                         binom[static_cast<std::size_t>(N)][static_cast<std::size_t>(r)]);
    }
    cache[N] = M;
    return M;
}

// Applies one axis's lower-triangular map to every line of the tensor along
// that axis. data layout: [outer][axis extent][inner].
void apply_axis(std::vector<Rational>& data, std::size_t outer, std::size_t extent,
                std::size_t inner, const std::vector<std::vector<Rational>>& M, ExecMode mode) {
    const std::size_t lines = outer * inner;
    auto line_job = [&](std::size_t line) {
        const std::size_t o = line / inner;
        const std::size_t in = line % inner;
        const std::size_t base = o * extent * inner + in;
        std::vector<Rational> src(extent);
        for (std::size_t e = 0; e < extent; ++e) src[e] = data[base + e * inner];
        for (std::size_t i = 0; i < extent; ++i) {
            Rational acc(0);
            const auto& row = M[i];
            for (std::size_t r = 0; r < row.size(); ++r)
                if (src[r] != 0 && row[r] != 0) acc += row[r] * src[r];
            data[base + i * inner] = std::move(acc);
        }
    };
#ifdef _OPENMP
    if (mode == ExecMode::Parallel && lines > 1) {
#pragma omp parallel for schedule(static)
        for (long long line = 0; line < static_cast<long long>(lines); ++line)
            line_job(static_cast<std::size_t>(line));
        return;
    }
#endif
    (void)mode;
    for (std::size_t line = 0; line < lines; ++line) line_job(line);
}

}  // namespace

void set_worker_count(int workers) {
    if (workers < 1) throw std::invalid_argument("set_worker_count: workers must be >= 1");
    g_workers.store(workers);
#ifdef _OPENMP
    omp_set_num_threads(workers);
#endif
}

int worker_count() {
    int w = g_workers.load();
    if (w == 0) w = env_workers();
#ifdef _OPENMP
    if (w == 0) w = omp_get_max_threads();
#endif
    return w == 0 ? 1 : w;
}

BernsteinTensor to_bernstein(const MultiPoly& p, const std::vector<int>& degrees, const Box& box) {
    return to_bernstein_with(p, degrees, box,
                             worker_count() > 1 ? ExecMode::Parallel : ExecMode::Serial);
}

BernsteinTensor to_bernstein_with(const MultiPoly& p, const std::vector<int>& degrees,
                                  const Box& box, ExecMode mode) {
    if (degrees.size() != p.var_count() || box.dim() != p.var_count())
        throw std::invalid_argument("to_bernstein: dimension mismatch");
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        if (box.iv[k].first > box.iv[k].second)
            throw std::invalid_argument("to_bernstein: inverted interval");
        if (degrees[k] < p.true_degree(p.vars()[k]))
            throw std::invalid_argument("to_bernstein: requested degree below true degree in " +
                                        p.vars()[k]);
    }

    // Affine map onto the unit cube.
    MultiPoly q = p;
    for (std::size_t k = 0; k < p.var_count(); ++k) {
        const Rational scale = box.iv[k].second - box.iv[k].first;
        q = affine_substitute(q, p.vars()[k], scale, box.iv[k].first);
    }

    // Zero-padded monomial tensor at the requested degrees.
    std::size_t total = 1;
    for (int d : degrees) total *= static_cast<std::size_t>(d) + 1;
    std::vector<Rational> data(total, Rational(0));
    {
        std::vector<int> e(p.var_count(), 0);
        bool more = true;
        while (more) {
            std::size_t flat = 0;
            for (std::size_t k = 0; k < e.size(); ++k)
                flat = flat * (static_cast<std::size_t>(degrees[k]) + 1) +
                       static_cast<std::size_t>(e[k]);
            data[flat] = q.at(e);
            more = false;
            for (std::size_t k = e.size(); k-- > 0;) {
                if (e[k] < q.degree_bounds()[k]) {
                    ++e[k];
                    std::fill(e.begin() + static_cast<long>(k) + 1, e.end(), 0);
                    more = true;
                    break;
                }
            }
        }
    }

    // One lower-triangular pass per axis.
    std::size_t inner = total;
    std::size_t outer = 1;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        const std::size_t extent = static_cast<std::size_t>(degrees[k]) + 1;
        inner /= extent;
        apply_axis(data, outer, extent, inner, axis_matrix(degrees[k]), mode);
        outer *= extent;
    }

    BernsteinTensor bt;
    bt.degrees = degrees;
    bt.box = box;
    bt.beta = std::move(data);
    return bt;
}

std::pair<Rational, Rational> enclosure_bounds(const BernsteinTensor& bt) {
    Rational lo = bt.beta.front(), hi = bt.beta.front();
    for (const Rational& b : bt.beta) {
        if (b < lo) lo = b;
        if (b > hi) hi = b;
    }
    return {lo, hi};
}

Box subbox_of(const Box& box, const std::vector<int>& splits, const std::vector<int>& cell) {
    Box sub;
    sub.iv.resize(box.dim());
    for (std::size_t k = 0; k < box.dim(); ++k) {
        const Rational width = (box.iv[k].second - box.iv[k].first) / splits[k];
        sub.iv[k].first = box.iv[k].first + width * cell[k];
        sub.iv[k].second = box.iv[k].first + width * (cell[k] + 1);
    }
    return sub;
}

std::vector<std::pair<Box, BernsteinTensor>> subdivide(const MultiPoly& p, const Box& box,
                                                       const std::vector<int>& splits) {
    return subdivide_with(p, box, splits,
                          worker_count() > 1 ? ExecMode::Parallel : ExecMode::Serial);
}

std::vector<std::pair<Box, BernsteinTensor>> subdivide_with(const MultiPoly& p, const Box& box,
                                                            const std::vector<int>& splits,
                                                            ExecMode mode) {
    if (splits.size() != box.dim()) throw std::invalid_argument("subdivide: splits arity");
    for (int s : splits)
        if (s < 1) throw std::invalid_argument("subdivide: split counts must be >= 1");

    std::vector<int> degrees(p.var_count());
    for (std::size_t k = 0; k < p.var_count(); ++k)
        degrees[k] = p.true_degree(p.vars()[k]);

    std::size_t count = 1;
    for (int s : splits) count *= static_cast<std::size_t>(s);

    std::vector<std::vector<int>> cells(count);
    {
        std::vector<int> cell(box.dim(), 0);
        for (std::size_t n = 0; n < count; ++n) {
            cells[n] = cell;
            for (std::size_t k = cell.size(); k-- > 0;) {
                if (++cell[k] < splits[k]) break;
                cell[k] = 0;
            }
        }
    }

    // Independent conversions merged into preallocated slots, so the result
    // order never depends on scheduling.
    std::vector<std::pair<Box, BernsteinTensor>> out(count);
    auto job = [&](std::size_t n) {
        const Box sub = subbox_of(box, splits, cells[n]);
        out[n] = {sub, to_bernstein_with(p, degrees, sub, ExecMode::Serial)};
    };
#ifdef _OPENMP
    if (mode == ExecMode::Parallel && count > 1) {
#pragma omp parallel for schedule(dynamic)
        for (long long n = 0; n < static_cast<long long>(count); ++n)
            job(static_cast<std::size_t>(n));
        return out;
    }
#endif
    (void)mode;
    for (std::size_t n = 0; n < count; ++n) job(n);
    return out;
}

}  // namespace berncert
