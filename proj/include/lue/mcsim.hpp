#ifndef LUE_MCSIM_HPP
#define LUE_MCSIM_HPP

#include <cstdint>
#include <vector>

#include "lue/errors.hpp"

namespace lue {

// Counter-based Philox4x32-10 stream keyed by (seed, stream id). Streams are
// independent for distinct ids, so chunked sampling is deterministic and
// order-independent in the work distribution.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();
    // uniform on the open interval (0, 1)
    double uniform();
    // standard normal (Box-Muller)
    double normal();
    // Gamma(shape, 1) for shape > 0 (Marsaglia-Tsang; boosted for shape < 1)
    double gamma(double shape);

private:
    void refill();
    std::uint32_t key_[2];
    std::uint32_t ctr_[4];
    std::uint32_t out_[4];
    int idx_;
    bool have_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

struct MCConfig {
    int n = 1;
    double alpha = 1.0;
    double s = 0.0;
    long samples = 100000;
    std::uint64_t seed = 1;
    long chunk = 8192;  // samples per work unit / RNG stream
    int threads = 0;    // 0 = hardware concurrency

    void validate() const {
        if (n < 1) throw DomainError("MCConfig: requires n >= 1");
        if (!(alpha > 0)) throw DomainError("MCConfig: requires alpha > 0");
        if (s < 0) throw DomainError("MCConfig: requires s >= 0");
        if (samples < 1000) throw DomainError("MCConfig: requires samples >= 1000");
        if (chunk < 1) throw DomainError("MCConfig: requires chunk >= 1");
    }
};

struct MCResult {
    double estimate = 0.0;   // sample mean of exp(-s sum_j 1/lambda_j)
    double std_error = 0.0;
    long samples_used = 0;
};

// One draw of Laguerre unitary ensemble eigenvalues (weight x^alpha e^{-x})
// via the bidiagonal chi model: eigenvalues of B B^T where B is lower
// bidiagonal with squared diagonal entries Gamma(alpha + n - i) and squared
// subdiagonal entries Gamma(n - 1 - i), i = 0..;  all eigenvalues > 0.
// The shape parameters are pinned by two oracles: the n = 1 draw is
// Gamma(alpha+1), and E[sum lambda] = n(n+alpha).
std::vector<double> sample_lue(const MCConfig& cfg, RngStream& rng);

// Monte Carlo estimate of the moment generating function
// M_f(s) = E[exp(-s sum_j 1/lambda_j)] over the n x n ensemble.
// Deterministic for fixed seed and chunk size; chunks reduce in index order.
MCResult mc_mgf(const MCConfig& cfg);

} // namespace lue

#endif
