#include "dfam/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>

#include "dfam/error.hpp"
#include "dfam/filter.hpp"
#include "dfam/fourier.hpp"

namespace dfam {

CharacterTable::CharacterTable(const GroupSpec& g) : group_(g) {
    const std::size_t v = g.order();
    re_.resize(v * v);
    im_.resize(v * v);
    for (std::size_t j = 0; j < v; ++j) {
        for (std::size_t x = 0; x < v; ++x) {
            const Complex c = char_eval(g, j, x);
            re_[j * v + x] = c.real();
            im_[j * v + x] = c.imag();
        }
    }
}

std::vector<double> CharacterTable::block_psd(const Block& block) const {
    // Off the trivial character dft_{f_X} = -2 sum_{x in X} conj chi(x).
    const std::size_t v = group_.order();
    std::vector<double> out(v - 1);
    for (std::size_t j = 1; j < v; ++j) {
        double re = 0.0, im = 0.0;
        const double* rr = &re_[j * v];
        const double* ii = &im_[j * v];
        for (std::size_t x : block) {
            re += rr[x];
            im += ii[x];
        }
        out[j - 1] = 4.0 * (re * re + im * im);
    }
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

namespace {

using Clock = std::chrono::steady_clock;

// Combination of {0..n-1} of size k with the given lexicographic rank.
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
    std::vector<std::size_t> c;
    c.reserve(k);
    std::size_t next = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        for (std::size_t x = next;; ++x) {
            const std::uint64_t below = binomial(n - x - 1, k - slot - 1);
            if (rank < below) {
                c.push_back(x);
                next = x + 1;
                break;
            }
            rank -= below;
        }
    }
    return c;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

Block to_block(const std::vector<std::size_t>& comb, bool dedup) {
    Block b;
    b.reserve(comb.size() + 1);
    if (dedup) {
        b.push_back(0);
        for (std::size_t x : comb) b.push_back(x + 1);
    } else {
        b = comb;
    }
    return b;
}

bool passes(const std::vector<double>& psd, double bound) {
    return std::all_of(psd.begin(), psd.end(), [bound](double p) { return p <= bound; });
}

struct VectorHash {
    std::size_t operator()(const std::vector<std::int64_t>& key) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : key) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

// Keys for a real vector; coordinates within `slack` quanta of a rounding
// boundary contribute both neighbours so near-ties cannot be missed.
std::vector<std::vector<std::int64_t>> probe_keys(const std::vector<double>& values, double quantum) {
    constexpr double slack = 0.01;
    constexpr std::size_t max_keys = 1024;
    std::vector<std::vector<std::int64_t>> keys(1);
    keys.front().reserve(values.size());
    for (double value : values) {
        const double q = value / quantum;
        const double lower = std::floor(q);
        const double frac = q - lower;
        const auto lo = static_cast<std::int64_t>(lower);
        if (std::abs(frac - 0.5) < slack && keys.size() * 2 <= max_keys) {
            const std::size_t n = keys.size();
            for (std::size_t i = 0; i < n; ++i) {
                keys.push_back(keys[i]);
                keys[i].push_back(lo);
                keys.back().push_back(lo + 1);
            }
        } else {
            const std::int64_t r = std::llround(q);
            for (auto& key : keys) key.push_back(r);
        }
    }
    return keys;
}

bool over_time(const Clock::time_point& start, double budget) {
    if (budget <= 0.0) return false;
    return std::chrono::duration<double>(Clock::now() - start).count() > budget;
}

}  // namespace

CandidateStream enumerate_candidates(const GroupSpec& g, std::size_t k, std::int64_t n, bool dedup, bool psd_prune,
                                     double tol, unsigned workers, std::uint64_t max_candidates) {
    const std::size_t v = g.order();
    if (k > v) throw DomainError("block size exceeds group order");
    CandidateStream stream;
    stream.k = k;
    stream.dedup = dedup && k > 0;
    const std::size_t pool = stream.dedup ? v - 1 : v;
    const std::size_t choose = stream.dedup ? k - 1 : k;
    const std::uint64_t total = binomial(pool, choose);
    if (total > max_candidates) {
        throw BudgetExceededError("enumerating " + std::to_string(total) + " blocks of size " + std::to_string(k) +
                                  " exceeds the candidate ceiling " + std::to_string(max_candidates));
    }
    const CharacterTable table(g);
    const double bound = 4.0 * static_cast<double>(n) + tol;

    workers = std::max(1u, workers);
    const std::uint64_t chunks = std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1));
    std::vector<std::vector<Candidate>> parts(chunks);
    std::vector<std::uint64_t> seen(chunks, 0);
    auto run_chunk = [&](std::uint64_t c) {
        const std::uint64_t begin = total * c / chunks;
        const std::uint64_t end = total * (c + 1) / chunks;
        if (begin >= end) return;
        std::vector<std::size_t> comb = unrank_combination(pool, choose, begin);
        for (std::uint64_t r = begin; r < end; ++r) {
            Block b = to_block(comb, stream.dedup);
            std::vector<double> p = table.block_psd(b);
            ++seen[c];
            if (!psd_prune || passes(p, bound)) parts[c].push_back(Candidate{std::move(b), std::move(p)});
            if (r + 1 < end) next_combination(comb, pool);
        }
    };
    if (chunks == 1) {
        run_chunk(0);
    } else {
        std::vector<std::jthread> threads;
        for (std::uint64_t c = 0; c < chunks; ++c) threads.emplace_back(run_chunk, c);
    }
    for (std::uint64_t c = 0; c < chunks; ++c) {
        stream.examined += seen[c];
        for (auto& cand : parts[c]) stream.candidates.push_back(std::move(cand));
    }
    stream.kept = stream.candidates.size();
    return stream;
}

std::vector<DifferenceFamily> fingerprint_match(const GroupSpec& g, const ParameterSet& params,
                                                std::span<const CandidateStream> streams, double tol,
                                                SearchStats& stats, const SearchLimits& limits, bool gs_mode) {
    const std::size_t t = streams.size();
    if (t == 0 || t != params.t()) throw ShapeError("need one candidate stream per block");
    const std::size_t dims = g.order() - 1;
    const double beta = 4.0 * static_cast<double>(params.n());
    const double match_tol = static_cast<double>(t) * tol;
    std::vector<DifferenceFamily> out;

    auto confirm = [&](std::vector<Block> blocks) {
        ++stats.matched;
        DifferenceFamily fam = make_family(g, std::move(blocks), params.lambda);
        if (verify_family(fam, gs_mode).valid) {
            ++stats.verified;
            out.push_back(std::move(fam));
        }
    };

    if (dims == 0) {
        // Trivial group: no nontrivial characters, every tuple matches.
        std::vector<std::size_t> pick(t, 0);
        std::vector<Block> blocks;
        for (std::size_t i = 0; i < t; ++i) {
            if (streams[i].candidates.empty()) return out;
            blocks.push_back(streams[i].candidates.front().block);
        }
        confirm(std::move(blocks));
        return out;
    }

    // Partial sums over streams 0..t-2, pruned coordinatewise by 4n.
    struct Partial {
        std::vector<double> sum;
        std::vector<std::size_t> picks;
    };
    std::vector<Partial> partials{Partial{std::vector<double>(dims, 0.0), {}}};
    for (std::size_t i = 0; i + 1 < t; ++i) {
        std::vector<Partial> next;
        for (const Partial& p : partials) {
            for (std::size_t c = 0; c < streams[i].candidates.size(); ++c) {
                const auto& psd = streams[i].candidates[c].psd;
                Partial q{p.sum, p.picks};
                bool ok = true;
                for (std::size_t j = 0; j < dims && ok; ++j) {
                    q.sum[j] += psd[j];
                    ok = q.sum[j] <= beta + match_tol;
                }
                if (!ok) continue;
                q.picks.push_back(c);
                next.push_back(std::move(q));
                if (next.size() > limits.max_candidates) {
                    stats.budget_exhausted = true;
                    throw BudgetExceededError("partial tuples exceed the candidate ceiling");
                }
            }
        }
        partials = std::move(next);
    }

    std::unordered_map<std::vector<std::int64_t>, std::vector<std::size_t>, VectorHash> index;
    for (std::size_t p = 0; p < partials.size(); ++p) {
        std::vector<std::int64_t> key(dims);
        for (std::size_t j = 0; j < dims; ++j) key[j] = std::llround(partials[p].sum[j] / kFingerprintQuantum);
        index[std::move(key)].push_back(p);
    }

    const CandidateStream& last = streams[t - 1];
    std::vector<double> complement(dims);
    for (const Candidate& cand : last.candidates) {
        for (std::size_t j = 0; j < dims; ++j) complement[j] = beta - cand.psd[j];
        std::set<std::size_t> hits;
        for (const auto& key : probe_keys(complement, kFingerprintQuantum)) {
            auto it = index.find(key);
            if (it != index.end()) hits.insert(it->second.begin(), it->second.end());
        }
        for (std::size_t p : hits) {
            const Partial& part = partials[p];
            bool close = true;
            for (std::size_t j = 0; j < dims && close; ++j) close = std::abs(part.sum[j] + cand.psd[j] - beta) <= match_tol;
            if (!close) continue;
            std::vector<Block> blocks;
            for (std::size_t i = 0; i + 1 < t; ++i) blocks.push_back(streams[i].candidates[part.picks[i]].block);
            blocks.push_back(cand.block);
            confirm(std::move(blocks));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const DifferenceFamily& a, const DifferenceFamily& b) { return a.blocks < b.blocks; });
    return out;
}

namespace {

void require_searchable(const GroupSpec& g, const SearchConfig& config) {
    const ParameterSet& p = config.params;
    if (p.v != static_cast<std::int64_t>(g.order())) {
        throw DomainError("parameter v=" + std::to_string(p.v) + " does not match group order " +
                          std::to_string(g.order()));
    }
    if (!validate_params(p, config.gs_mode)) throw DomainError("parameter set " + p.literal() + " is not admissible");
}

// Random k-subsets (first block containing the identity when dedup) for the sampling mode.
CandidateStream sample_candidates(const GroupSpec& g, std::size_t k, std::int64_t n, bool dedup,
                                  const SearchConfig& config, std::mt19937_64& rng) {
    const std::size_t v = g.order();
    CandidateStream stream;
    stream.k = k;
    stream.dedup = dedup && k > 0;
    const CharacterTable table(g);
    const double bound = 4.0 * static_cast<double>(n) + config.tol;
    std::set<Block> seen;
    std::vector<std::size_t> pool(v);
    std::iota(pool.begin(), pool.end(), 0);
    const std::uint64_t draws = std::min(config.limits.samples_per_block, config.limits.max_candidates);
    for (std::uint64_t d = 0; d < draws; ++d) {
        Block b;
        if (stream.dedup) {
            std::vector<std::size_t> rest(pool.begin() + 1, pool.end());
            std::shuffle(rest.begin(), rest.end(), rng);
            b.push_back(0);
            b.insert(b.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(k - 1));
        } else {
            std::vector<std::size_t> all = pool;
            std::shuffle(all.begin(), all.end(), rng);
            b.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
        }
        std::sort(b.begin(), b.end());
        if (!seen.insert(b).second) continue;
        ++stream.examined;
        std::vector<double> p = table.block_psd(b);
        if (!config.psd_prune || passes(p, bound)) stream.candidates.push_back(Candidate{std::move(b), std::move(p)});
    }
    std::sort(stream.candidates.begin(), stream.candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.block < b.block; });
    stream.kept = stream.candidates.size();
    return stream;
}

}  // namespace

SearchResult search(const GroupSpec& g, const SearchConfig& config, const FamilySink& sink) {
    require_searchable(g, config);
    if (config.mode == SearchMode::anneal) return anneal_search(g, config, sink);

    SearchResult result;
    if (!config.gs_mode && !sum_of_squares_check(config.params)) return result;  // no family can exist

    const ParameterSet& p = config.params;
    std::vector<CandidateStream> streams;
    std::map<std::pair<std::size_t, bool>, std::size_t> cache;
    std::mt19937_64 rng(config.seed);
    std::uint64_t budget_left = config.limits.max_candidates;
    for (std::size_t i = 0; i < p.t(); ++i) {
        const auto k = static_cast<std::size_t>(p.k[i]);
        const bool dedup = config.dedup && i == 0;
        const auto key = std::make_pair(k, dedup);
        if (config.mode == SearchMode::exhaustive) {
            if (auto it = cache.find(key); it != cache.end()) {
                streams.push_back(streams[it->second]);
                continue;
            }
            try {
                streams.push_back(
                    enumerate_candidates(g, k, p.n(), dedup, config.psd_prune, config.tol, config.workers, budget_left));
            } catch (const BudgetExceededError&) {
                result.stats.budget_exhausted = true;
                throw;
            }
            budget_left -= std::min(budget_left, streams.back().examined);
            cache[key] = streams.size() - 1;
        } else {
            streams.push_back(sample_candidates(g, k, p.n(), dedup, config, rng));
        }
        result.stats.candidates += streams.back().examined;
        result.stats.pruned_by_psd += streams.back().examined - streams.back().kept;
    }

    result.families = fingerprint_match(g, p, streams, config.tol, result.stats, config.limits, config.gs_mode);
    if (config.limits.max_solutions && result.families.size() > config.limits.max_solutions) {
        result.families.resize(config.limits.max_solutions);
    }
    if (sink) {
        for (const auto& fam : result.families) sink(fam);
    }
    return result;
}

std::int64_t anneal_objective(const GroupSpec& g, std::span<const Block> blocks, std::int64_t alpha) {
    std::vector<IntFunction> fs;
    for (const Block& b : blocks) fs.push_back(associated_function(g, b));
    const IntFunction s = paf_sum(fs);
    std::int64_t e = 0;
    for (std::size_t x = 1; x < s.size(); ++x) e += (s[x] - alpha) * (s[x] - alpha);
    return e;
}

SearchResult anneal_search(const GroupSpec& g, const SearchConfig& config, const FamilySink& sink) {
    require_searchable(g, config);
    const ParameterSet& p = config.params;
    const std::size_t v = g.order();
    const std::size_t t = p.t();
    const std::int64_t alpha = paf_constants(p).alpha;
    const double bound = 4.0 * static_cast<double>(p.n()) + config.tol;
    const CharacterTable table(g);
    const auto start = Clock::now();
    std::mt19937_64 rng(config.seed);
    SearchResult result;
    if (!config.gs_mode && !sum_of_squares_check(p)) return result;

    struct BlockState {
        std::vector<std::int64_t> f;    // +-1 values
        std::vector<std::size_t> in, out;
        std::vector<double> re, im;     // sum over the block of chi_j, j = 1..v-1
        std::vector<std::int64_t> paf;
    };
    std::vector<BlockState> state(t);
    std::vector<std::int64_t> total(v, 0);

    auto psd_ok = [&](const std::vector<double>& re, const std::vector<double>& im) {
        for (std::size_t j = 0; j + 1 < v; ++j) {
            if (4.0 * (re[j] * re[j] + im[j] * im[j]) > bound) return false;
        }
        return true;
    };
    auto char_sums = [&](const Block& b, std::vector<double>& re, std::vector<double>& im) {
        re.assign(v - 1, 0.0);
        im.assign(v - 1, 0.0);
        for (std::size_t j = 1; j < v; ++j) {
            for (std::size_t x : b) {
                re[j - 1] += table.re(j, x);
                im[j - 1] += table.im(j, x);
            }
        }
    };
    auto load_block = [&](std::size_t i, const Block& b) {
        BlockState& s = state[i];
        s.f.assign(v, 1);
        for (std::size_t x : b) s.f[x] = -1;
        s.in = b;
        s.out = complement_block(g, b);
        char_sums(b, s.re, s.im);
        s.paf = paf_function(IntFunction(g, s.f)).values;
    };
    auto random_block = [&](std::size_t k) {
        std::vector<std::size_t> all(v);
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        Block b(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(b.begin(), b.end());
        return b;
    };
    auto restart = [&]() {
        for (std::size_t i = 0; i < t; ++i) {
            const auto k = static_cast<std::size_t>(p.k[i]);
            Block b = random_block(k);
            if (config.psd_prune) {
                std::vector<double> re, im;
                for (int attempt = 0; attempt < 1000; ++attempt) {
                    char_sums(b, re, im);
                    if (psd_ok(re, im)) break;
                    b = random_block(k);
                }
            }
            load_block(i, b);
        }
        std::fill(total.begin(), total.end(), 0);
        for (const auto& s : state) {
            for (std::size_t x = 0; x < v; ++x) total[x] += s.paf[x];
        }
    };
    auto energy_of = [&](const std::vector<std::int64_t>& tot) {
        std::int64_t e = 0;
        for (std::size_t x = 1; x < v; ++x) e += (tot[x] - alpha) * (tot[x] - alpha);
        return e;
    };
    // paf change from flipping f at q, for x != e.
    auto flip = [&](std::vector<std::int64_t>& f, std::vector<std::int64_t>& paf, std::size_t q) {
        const std::int64_t fq = f[q];
        for (std::size_t x = 1; x < v; ++x) paf[x] -= 2 * fq * (f[g.sub(q, x)] + f[g.add(q, x)]);
        f[q] = -fq;
    };

    std::vector<std::size_t> movable;
    for (std::size_t i = 0; i < t; ++i) {
        if (p.k[i] > 0 && p.k[i] < p.v) movable.push_back(i);
    }
    restart();
    std::int64_t energy = energy_of(total);
    result.stats.best_objective = energy;
    std::set<std::vector<Block>> found;
    const double t0 = std::max(1.0, static_cast<double>(v));
    double temperature = t0;
    const double cooling = 0.9995;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::int64_t> f_new, paf_new, total_new(v);

    auto record = [&]() -> bool {
        std::vector<Block> blocks;
        for (const auto& s : state) {
            Block b = s.in;
            std::sort(b.begin(), b.end());
            blocks.push_back(std::move(b));
        }
        if (found.count(blocks)) return false;
        ++result.stats.matched;
        DifferenceFamily fam = make_family(g, blocks, p.lambda);
        if (!verify_family(fam, config.gs_mode).valid) return false;
        ++result.stats.verified;
        found.insert(blocks);
        if (sink) sink(fam);
        result.families.push_back(std::move(fam));
        return true;
    };

    if (energy == 0) record();
    while (true) {
        if (config.limits.max_solutions && result.families.size() >= config.limits.max_solutions) break;
        if (result.stats.iterations >= config.limits.max_iterations) {
            result.stats.budget_exhausted = true;
            break;
        }
        if (over_time(start, config.limits.time_budget_seconds)) {
            result.stats.budget_exhausted = true;
            break;
        }
        if (movable.empty()) break;
        ++result.stats.iterations;
        const std::size_t i = movable[std::uniform_int_distribution<std::size_t>(0, movable.size() - 1)(rng)];
        BlockState& s = state[i];
        const std::size_t pi = std::uniform_int_distribution<std::size_t>(0, s.in.size() - 1)(rng);
        const std::size_t qi = std::uniform_int_distribution<std::size_t>(0, s.out.size() - 1)(rng);
        const std::size_t leave = s.in[pi], enter = s.out[qi];

        std::vector<double> re = s.re, im = s.im;
        for (std::size_t j = 1; j < v; ++j) {
            re[j - 1] += table.re(j, enter) - table.re(j, leave);
            im[j - 1] += table.im(j, enter) - table.im(j, leave);
        }
        if (config.psd_prune && !psd_ok(re, im)) {
            ++result.stats.psd_rejected_moves;
            continue;
        }
        f_new = s.f;
        paf_new = s.paf;
        flip(f_new, paf_new, leave);
        flip(f_new, paf_new, enter);
        for (std::size_t x = 0; x < v; ++x) total_new[x] = total[x] - s.paf[x] + paf_new[x];
        const std::int64_t e_new = energy_of(total_new);
        const double delta = static_cast<double>(e_new - energy);
        if (delta <= 0 || unit(rng) < std::exp(-delta / temperature)) {
            s.f = f_new;
            s.paf = paf_new;
            s.re = std::move(re);
            s.im = std::move(im);
            s.in[pi] = enter;
            s.out[qi] = leave;
            total = total_new;
            energy = e_new;
            result.stats.best_objective = std::min(result.stats.best_objective, energy);
            if (energy == 0) {
                record();
                restart();
                energy = energy_of(total);
                temperature = t0;
            }
        }
        temperature = std::max(temperature * cooling, 0.05);
        if (temperature <= 0.05 && unit(rng) < 1e-4) temperature = t0;  // occasional reheat
    }
    return result;
}

std::vector<GsCase> gs_quadruple_search(std::size_t v) {
    if (v < 1 || v > 4) throw DomainError("GS quadruples with an empty block exist only for v in 1..4");
    std::vector<GroupSpec> groups{GroupSpec(std::vector<int>{static_cast<int>(v)})};
    if (v == 4) groups.emplace_back(std::vector<int>{2, 2});

    const auto vi = static_cast<std::int64_t>(v);
    std::vector<GsCase> cases;
    for (const GroupSpec& g : groups) {
        for (std::int64_t k1 = 0; 2 * k1 <= vi; ++k1) {
            for (std::int64_t k2 = k1; 2 * k2 <= vi; ++k2) {
                for (std::int64_t k3 = k2; 2 * k3 <= vi; ++k3) {
                    const std::int64_t lhs = (vi - 2 * k1) * (vi - 2 * k1) + (vi - 2 * k2) * (vi - 2 * k2) +
                                             (vi - 2 * k3) * (vi - 2 * k3);
                    if (lhs != vi * (4 - vi)) continue;
                    ParameterSet params{vi, {0, k1, k2, k3}, k1 + k2 + k3 - vi};
                    if (!validate_params(params, true)) continue;

                    GsCase gs{g, params, {}};
                    std::vector<std::vector<Block>> options(4);
                    for (std::size_t i = 0; i < 4; ++i) {
                        const auto k = static_cast<std::size_t>(params.k[i]);
                        if (k == 0) {
                            options[i].push_back({});
                            continue;
                        }
                        std::vector<std::size_t> comb(k - 1);
                        std::iota(comb.begin(), comb.end(), 0);
                        do {
                            options[i].push_back(to_block(comb, true));
                        } while (k > 1 && next_combination(comb, v - 1));
                    }
                    for (const Block& b1 : options[1]) {
                        for (const Block& b2 : options[2]) {
                            for (const Block& b3 : options[3]) {
                                DifferenceFamily fam = make_family(g, {options[0].front(), b1, b2, b3}, params.lambda);
                                if (verify_family(fam, true).valid) gs.families.push_back(std::move(fam));
                            }
                        }
                    }
                    cases.push_back(std::move(gs));
                }
            }
        }
    }
    return cases;
}

}  // namespace dfam
