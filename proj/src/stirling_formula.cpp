#include "partcalc/stirling_formula.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "partcalc/coefficients.hpp"

namespace partcalc {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

u64 mod_inverse(u64 a, u64 m) {
    // a and m coprime, m >= 1.
    if (m == 1) return 0;
    i128 t = 0, new_t = 1, r = m, new_r = a % m;
    while (new_r != 0) {
        i128 q = r / new_r;
        t -= q * new_t; std::swap(t, new_t);
        r -= q * new_r; std::swap(r, new_r);
    }
    if (t < 0) t += m;
    return static_cast<u64>(t);
}

// Sums keyed by S; dense when S is small enough, ordered map otherwise.
class Histogram {
public:
    explicit Histogram(u64 max_key) {
        if (max_key < kDenseLimit) dense_.resize(max_key + 1);
    }
    void add(u64 key, const ExactInt& v) {
        if (!dense_.empty()) dense_[key] += v;
        else sparse_[key] += v;
    }
    std::map<u64, ExactInt> to_map() && {
        if (dense_.empty()) return std::move(sparse_);
        std::map<u64, ExactInt> out;
        for (u64 k = 0; k < dense_.size(); ++k)
            if (!dense_[k].is_zero()) out.emplace(k, std::move(dense_[k]));
        return out;
    }

private:
    static constexpr u64 kDenseLimit = u64{1} << 22;
    std::vector<ExactInt> dense_;
    std::map<u64, ExactInt> sparse_;
};

struct BoxWalker {
    const CongruenceBox& box;
    u64 modulus;
    u64 residue;
    std::vector<std::vector<ExactInt>> tables;  // tables[t][x]
    std::vector<std::vector<char>> reach;       // reach[t][rho]: rho reachable by coords t..m-1; empty = unknown
    u64 max_sum = 0;

    BoxWalker(const CongruenceBox& b, const CoefficientFn& coeff_at) : box(b) {
        modulus = box.modulus.to_uint64();
        residue = box.residue.mod(box.modulus).to_uint64();
        const std::size_t m = box.bounds.size();
        tables.resize(m);
        for (std::size_t t = 0; t < m; ++t) {
            tables[t].reserve(box.bounds[t] + 1);
            for (u64 x = 0; x <= box.bounds[t]; ++x) tables[t].push_back(coeff_at(t, x));
            max_sum += box.weights[t] * box.bounds[t];
        }
        build_reachability();
    }

    void build_reachability() {
        const std::size_t m = box.bounds.size();
        u128 cost = 0;
        for (std::size_t t = 0; t < m; ++t) cost += u128{modulus} * std::min<u64>(box.bounds[t] + 1, modulus);
        if (cost > 50'000'000) return;
        reach.assign(m + 1, std::vector<char>(modulus, 0));
        reach[m][0] = 1;
        for (std::size_t t = m; t-- > 0;) {
            const u64 w = box.weights[t] % modulus;
            const u64 xs = std::min<u64>(box.bounds[t] + 1, modulus);
            for (u64 rho = 0; rho < modulus; ++rho) {
                if (!reach[t + 1][rho]) continue;
                u64 shifted = rho;
                for (u64 x = 0; x < xs; ++x) {
                    reach[t][shifted] = 1;
                    shifted = static_cast<u64>((u128{shifted} + w) % modulus);
                }
            }
        }
    }

    bool reachable(std::size_t t, u64 partial_sum) const {
        if (reach.empty()) return true;
        const u64 need = static_cast<u64>((u128{residue} + modulus - partial_sum % modulus) % modulus);
        return reach[t][need] != 0;
    }

    // Walks coordinate t over [lo, hi].
    void walk(std::size_t t, u64 lo, u64 hi, u64 sum, const ExactInt& prod, Histogram& hist, u64& points) const {
        const std::size_t m = box.bounds.size();
        const u64 w = box.weights[t];
        if (t + 1 == m) {
            const u64 need = static_cast<u64>((u128{residue} + modulus - sum % modulus) % modulus);
            const u64 g = std::gcd(w % modulus == 0 ? modulus : w % modulus, modulus);
            if (need % g != 0) return;
            const u64 step = modulus / g;
            const u64 x0 = static_cast<u64>((u128{need / g} * mod_inverse((w / g) % step, step)) % step);
            u64 x = lo + (x0 + step - lo % step) % step;
            for (; x <= hi; x += step) {
                const ExactInt& c = tables[t][x];
                if (c.is_zero()) continue;
                hist.add(sum + w * x, prod * c);
                ++points;
            }
            return;
        }
        for (u64 x = lo; x <= hi; ++x) {
            const ExactInt& c = tables[t][x];
            if (c.is_zero()) continue;
            const u64 next_sum = sum + w * x;
            if (!reachable(t + 1, next_sum)) continue;
            walk(t + 1, 0, box.bounds[t + 1], next_sum, prod * c, hist, points);
        }
    }
};

void require(bool ok, const std::string& what) {
    if (!ok) throw HypothesisError(what);
}

}  // namespace

ExactInt CongruenceBox::raw_size() const {
    ExactInt size(1);
    for (u64 b : bounds) size *= ExactInt(static_cast<std::int64_t>(b)) + ExactInt(1);
    return size;
}

void CongruenceBox::validate() const {
    if (bounds.empty()) throw std::invalid_argument("congruence box needs at least one coordinate");
    if (bounds.size() != weights.size()) throw std::invalid_argument("box bounds and weights differ in length");
    if (std::find(weights.begin(), weights.end(), u64{0}) != weights.end())
        throw std::invalid_argument("box weights must be positive");
    if (modulus < ExactInt(1)) throw std::invalid_argument("box modulus must be positive");
    if (!modulus.fits_uint64()) throw std::invalid_argument("box modulus too large");
}

std::vector<std::vector<u64>> box_points(const CongruenceBox& box) {
    box.validate();
    std::vector<std::vector<u64>> out;
    std::vector<u64> x(box.bounds.size(), 0);
    const ExactInt residue = box.residue.mod(box.modulus);
    auto rec = [&](auto&& self, std::size_t t) -> void {
        if (t == x.size()) {
            ExactInt s(0);
            for (std::size_t i = 0; i < x.size(); ++i)
                s += ExactInt(static_cast<std::int64_t>(box.weights[i] * x[i]));
            if (s.mod(box.modulus) == residue) out.push_back(x);
            return;
        }
        for (u64 v = 0; v <= box.bounds[t]; ++v) {
            x[t] = v;
            self(self, t + 1);
        }
    };
    rec(rec, 0);
    return out;
}

StirlingKernelParams::StirlingKernelParams(std::uint32_t r, ExactInt d, ExactInt target)
    : r_len(r), modulus(std::move(d)), n(std::move(target)), stirling(stirling_first_unsigned(r)) {
    if (modulus < ExactInt(1)) throw std::invalid_argument("kernel modulus must be positive");
}

ExactRat stirling_kernel(const StirlingKernelParams& kernel, const ExactInt& weighted_sum) {
    const std::uint32_t r = kernel.r_len;
    ExactRat total;
    for (std::uint32_t m = 0; m < r; ++m) {
        const ExactInt n_pow = kernel.n.pow(m);
        for (std::uint32_t k = m; k < r; ++k) {
            ExactInt numer = kernel.stirling.at(k + 1) * binomial(k, m) * weighted_sum.pow(k - m) * n_pow;
            if ((k - m) % 2 == 1) numer = -numer;
            total += ExactRat(numer, kernel.modulus.pow(k));
        }
    }
    return total;
}

std::map<u64, ExactInt> weighted_sum_histogram(const CongruenceBox& box, const CoefficientFn& coeff_at,
                                               const StirlingOptions& options, u64* points_visited) {
    box.validate();
    const ExactInt size = box.raw_size();
    if (size > ExactInt(static_cast<std::int64_t>(options.max_box_points)))
        throw CostGuardError("congruence box has " + size.to_string() + " points, above the limit of " +
                             std::to_string(options.max_box_points));

    const BoxWalker walker(box, coeff_at);
    struct Part {
        std::map<u64, ExactInt> hist;
        u64 points = 0;
    };
    const u64 first_range = box.bounds[0] + 1;
    Part merged = partitioned_reduce(
        static_cast<std::size_t>(first_range), options.partitioning, Part{},
        [&](std::size_t begin, std::size_t end) {
            Part part;
            if (begin >= end) return part;
            Histogram hist(walker.max_sum);
            if (walker.reachable(0, 0))
                walker.walk(0, begin, end - 1, 0, ExactInt(1), hist, part.points);
            part.hist = std::move(hist).to_map();
            return part;
        },
        [](Part acc, Part part) {
            for (auto& [key, v] : part.hist) acc.hist[key] += v;
            acc.points += part.points;
            return acc;
        });
    if (points_visited) *points_visited = merged.points;
    return std::move(merged.hist);
}

RegroupedEvaluation regrouped_sum_detailed(const CoefficientFn& coeff_at, const CongruenceBox& box,
                                           const StirlingKernelParams& kernel, const StirlingOptions& options) {
    if (kernel.modulus != box.modulus) throw std::invalid_argument("box and kernel moduli differ");
    if (kernel.n.mod(kernel.modulus) != box.residue.mod(box.modulus))
        throw std::invalid_argument("box residue is not n mod D");

    RegroupedEvaluation out;
    const auto hist = weighted_sum_histogram(box, coeff_at, options, &out.points);
    out.distinct_sums = hist.size();

    const ExactInt scale = kernel.modulus.pow(kernel.r_len - 1);
    for (const auto& [sum, multiplicity] : hist) {
        ExactRat term = stirling_kernel(kernel, ExactInt(static_cast<std::int64_t>(sum)));
        if (!(term * ExactRat(scale)).is_integer())
            throw IntegralityError("kernel at S = " + std::to_string(sum) + " is not an integer over D^(r-1)");
        out.unnormalized += ExactRat(multiplicity) * term;
    }
    const ExactRat value = out.unnormalized / ExactRat(factorial(kernel.r_len - 1));
    if (!value.is_integer())
        throw IntegralityError("Stirling sum is not an integer: " + value.to_string());
    out.value = value.to_integer();
    return out;
}

ExactInt regrouped_sum(const CoefficientFn& coeff_at, const CongruenceBox& box, const StirlingKernelParams& kernel,
                       const StirlingOptions& options) {
    return regrouped_sum_detailed(coeff_at, box, kernel, options).value;
}

RegroupedEvaluation p_a_via_teora_detailed(const WeightSequence& a, std::uint32_t n, const StirlingOptions& options) {
    const ExactInt& d = a.lcm();
    CongruenceBox box;
    for (std::uint32_t part : a.parts()) {
        box.bounds.push_back((d.exact_div(ExactInt(part)) - ExactInt(1)).to_uint64());
        box.weights.push_back(part);
    }
    box.modulus = d;
    box.residue = ExactInt(n).mod(d);
    const StirlingKernelParams kernel(static_cast<std::uint32_t>(a.length()), d, ExactInt(n));
    return regrouped_sum_detailed([](std::size_t, u64) { return ExactInt(1); }, box, kernel, options);
}

ExactInt p_a_via_teora(const WeightSequence& a, std::uint32_t n, const StirlingOptions& options) {
    return p_a_via_teora_detailed(a, n, options).value;
}

RegroupedEvaluation regrouped_for_sequence(const WeightSequence& seq, std::uint32_t n,
                                           const StirlingOptions& options) {
    const ExactInt& d = seq.lcm();
    CongruenceBox box;
    std::vector<FPolySpec> specs;
    for (auto [part, mult] : seq.compressed()) {
        const ExactInt span = d.exact_div(ExactInt(part));
        specs.emplace_back(mult, span);
        box.bounds.push_back(specs.back().degree().to_uint64());
        box.weights.push_back(part);
    }
    box.modulus = d;
    box.residue = ExactInt(n).mod(d);
    const StirlingKernelParams kernel(static_cast<std::uint32_t>(seq.length()), d, ExactInt(n));
    return regrouped_sum_detailed([&](std::size_t t, u64 l) { return f_coeff_closed(specs[t], l); }, box, kernel,
                                  options);
}

ExactInt pp_via_stirling(std::uint32_t n, const StirlingOptions& options) {
    require(n >= 3, "pp Stirling formula requires n >= 3");
    return regrouped_for_sequence(seq_pp(n), n, options).value;
}

ExactInt ppr_via_stirling(std::uint32_t n, std::uint32_t r, const StirlingOptions& options) {
    require(n >= 3 && r >= 2 && r + 1 <= n, "pp_r Stirling formula requires n >= 3 and 2 <= r <= n-1");
    return regrouped_for_sequence(seq_pp_r(n, r), n, options).value;
}

ExactInt pps_via_stirling(std::uint32_t n, const StirlingOptions& options) {
    require(n >= 3, "pps Stirling formula requires n >= 3");
    return regrouped_for_sequence(seq_strict(n), n, options).value;
}

ExactInt ppso_via_stirling(std::uint32_t n, const StirlingOptions& options) {
    require(n >= 3, "ppso Stirling formula requires n >= 3");
    return regrouped_for_sequence(seq_symmetric(n), n, options).value;
}

ExactInt Pr_via_stirling(std::uint32_t n, std::uint32_t r, const StirlingOptions& options) {
    require(n >= 4 && r >= 2 && n > r, "P_r Stirling formula requires n >= 4 and n > r >= 2");
    return regrouped_for_sequence(seq_multipartition(n, r), n, options).value;
}

}  // namespace partcalc
