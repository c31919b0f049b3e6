#include "lue/mcsim.hpp"

#include <cmath>
#include <atomic>
#include <future>
#include <thread>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace lue {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) : idx_(4) {
    key_[0] = static_cast<std::uint32_t>(seed);
    key_[1] = static_cast<std::uint32_t>(seed >> 32);
    ctr_[0] = 0;
    ctr_[1] = 0;
    ctr_[2] = static_cast<std::uint32_t>(stream_id);
    ctr_[3] = static_cast<std::uint32_t>(stream_id >> 32);
}

void RngStream::refill() {
    std::uint32_t c[4] = {ctr_[0], ctr_[1], ctr_[2], ctr_[3]};
    std::uint32_t k0 = key_[0], k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, c[0], hi0, lo0);
        mulhilo(kPhiloxM1, c[2], hi1, lo1);
        std::uint32_t n0 = hi1 ^ c[1] ^ k0;
        std::uint32_t n1 = lo1;
        std::uint32_t n2 = hi0 ^ c[3] ^ k1;
        std::uint32_t n3 = lo0;
        c[0] = n0; c[1] = n1; c[2] = n2; c[3] = n3;
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    for (int i = 0; i < 4; ++i) out_[i] = c[i];
    // 64-bit block counter in (ctr_[0], ctr_[1])
    if (++ctr_[0] == 0) ++ctr_[1];
    idx_ = 0;
}

std::uint64_t RngStream::next_u64() {
    if (idx_ > 2) refill();
    std::uint64_t lo = out_[idx_];
    std::uint64_t hi = out_[idx_ + 1];
    idx_ += 2;
    return (hi << 32) | lo;
}

double RngStream::uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() {
    if (have_spare_normal_) {
        have_spare_normal_ = false;
        return spare_normal_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double th = 2.0 * M_PI * u2;
    spare_normal_ = r * std::sin(th);
    have_spare_normal_ = true;
    return r * std::cos(th);
}

double RngStream::gamma(double shape) {
    if (!(shape > 0)) throw DomainError("RngStream::gamma: requires shape > 0");
    if (shape < 1.0) {
        double g = gamma(shape + 1.0);
        return g * std::pow(uniform(), 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = uniform();
        double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

std::vector<double> sample_lue(const MCConfig& cfg, RngStream& rng) {
    const int n = cfg.n;
    Eigen::VectorXd diag(n), subdiag(n > 1 ? n - 1 : 1);
    std::vector<double> d_sq(n), e_sq(n > 1 ? n - 1 : 0);
    for (int j = 0; j < n; ++j) d_sq[j] = rng.gamma(cfg.alpha + n - j);
    for (int j = 0; j + 1 < n; ++j) e_sq[j] = rng.gamma(static_cast<double>(n - 1 - j));

    // T = B B^T is symmetric tridiagonal
    for (int j = 0; j < n; ++j) diag[j] = d_sq[j] + (j > 0 ? e_sq[j - 1] : 0.0);
    for (int j = 0; j + 1 < n; ++j) subdiag[j] = std::sqrt(d_sq[j] * e_sq[j]);

    if (n == 1) return {diag[0]};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, subdiag, Eigen::EigenvaluesOnly);
    std::vector<double> out(n);
    for (int j = 0; j < n; ++j) out[j] = es.eigenvalues()[j];
    return out;
}

MCResult mc_mgf(const MCConfig& cfg) {
    cfg.validate();
    const long n_chunks = (cfg.samples + cfg.chunk - 1) / cfg.chunk;

    struct Partial {
        double sum = 0.0, sumsq = 0.0;
        long count = 0;
    };
    auto run_chunk = [&cfg](long chunk_idx) {
        RngStream rng(cfg.seed, static_cast<std::uint64_t>(chunk_idx));
        long lo = chunk_idx * cfg.chunk;
        long hi = std::min(lo + cfg.chunk, cfg.samples);
        Partial p;
        for (long i = lo; i < hi; ++i) {
            std::vector<double> lam = sample_lue(cfg, rng);
            double stat = 0.0;
            for (double x : lam) stat += 1.0 / x;
            double v = std::exp(-cfg.s * stat);
            p.sum += v;
            p.sumsq += v * v;
            ++p.count;
        }
        return p;
    };

    int threads = cfg.threads > 0 ? cfg.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    std::vector<Partial> parts(n_chunks);
    std::atomic<long> next{0};
    auto worker = [&] {
        for (;;) {
            long idx = next.fetch_add(1);
            if (idx >= n_chunks) return;
            parts[idx] = run_chunk(idx);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // reduce in chunk order for bit-identical results
    double sum = 0.0, sumsq = 0.0;
    long count = 0;
    for (const Partial& p : parts) {
        sum += p.sum;
        sumsq += p.sumsq;
        count += p.count;
    }
    MCResult r;
    r.samples_used = count;
    r.estimate = sum / static_cast<double>(count);
    double var = (sumsq - sum * sum / static_cast<double>(count)) /
                 (static_cast<double>(count) - 1.0);
    if (var < 0.0) var = 0.0;
    r.std_error = std::sqrt(var / static_cast<double>(count));
    return r;
}

} // namespace lue
