#include "froglab/verify.hpp"

#include <algorithm>
#include <sstream>

#include "froglab/animals.hpp"
#include "froglab/experiments.hpp"
#include "froglab/oracle.hpp"
#include "froglab/parallel.hpp"
#include "froglab/pathsearch.hpp"
#include "froglab/removal.hpp"
#include "froglab/sitefield.hpp"
#include "froglab/spatial.hpp"
#include "froglab/tessellation.hpp"

namespace froglab {

namespace {

/// Deterministic per-instance word stream.
struct DetRng {
    std::uint64_t key;
    std::uint64_t ctr = 0;

    explicit DetRng(std::uint64_t master, std::uint64_t tag, std::uint64_t instance)
        : key(absorb(absorb(master, tag), instance)) {}

    std::uint64_t word() { return stream_word(key, ctr++); }
    std::uint32_t below(std::uint32_t n) { return bounded(word(), n); }
    std::int32_t coord(int radius) {
        return static_cast<std::int32_t>(below(static_cast<std::uint32_t>(2 * radius + 1))) -
               radius;
    }
    Site site_in_box(int d, int radius) {
        Site s;
        for (int i = 0; i < d; ++i) s.c[static_cast<std::size_t>(i)] = coord(radius);
        return s;
    }
    Site nonzero_site_in_box(int d, int radius) {
        for (;;) {
            Site s = site_in_box(d, radius);
            if (l1_norm(s) > 0) return s;
        }
    }
};

std::string site_str(const Site& s, int d) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < d; ++i) {
        if (i) os << ',';
        os << s.c[static_cast<std::size_t>(i)];
    }
    os << ')';
    return os.str();
}

struct InstanceOutcome {
    bool ok = true;
    std::string witness;
};

template <class F>
CheckOutcome run_cases(const std::string& name, std::int64_t cases, int workers, F&& fn) {
    std::vector<InstanceOutcome> slots(static_cast<std::size_t>(cases));
    par::for_index(cases, workers, [&](std::int64_t i) {
        fn(i, slots[static_cast<std::size_t>(i)]);
    });
    CheckOutcome out;
    out.name = name;
    out.cases = cases;
    for (const auto& s : slots) {
        if (s.ok) continue;
        ++out.violations;
        if (out.witness.empty()) out.witness = s.witness;
    }
    out.pass = out.violations == 0;
    return out;
}

bool parity_matches(std::int64_t t, std::int64_t dist) {
    return t >= dist && (t - dist) % 2 == 0;
}

constexpr std::uint64_t kCorruptReplicaShift = 0x5EED5EEDull;

CheckOutcome check_engine_oracle(const VerifyOptions& o) {
    return run_cases(
        "engine_oracle", o.sizes.engine_oracle_instances, o.workers,
        [&](std::int64_t i, InstanceOutcome& out) {
            DetRng rng(o.master_seed, 0xE0E0, static_cast<std::uint64_t>(i));
            const Site src = rng.site_in_box(2, 8);
            const Site dst = rng.site_in_box(2, 8);
            std::vector<Site> mask_sites;
            const std::uint32_t mask_size = rng.below(3);
            for (std::uint32_t k = 0; k < mask_size; ++k) {
                const Site z = rng.site_in_box(2, 8);
                if (z != src) mask_sites.push_back(z);
            }
            const FrogMask mask(mask_sites);

            const WalkField field(2, o.master_seed, static_cast<std::uint64_t>(i));
            PassageEngine engine;
            const PassageSample s = engine.run_adaptive(field, src, dst, mask, PassageEngine::kDefaultHorizonCap);

            std::ostringstream w;
            w << "engine_oracle seed=" << o.master_seed << " instance=" << i
              << " src=" << site_str(src, 2) << " dst=" << site_str(dst, 2) << " mask=[";
            for (std::size_t k = 0; k < mask_sites.size(); ++k)
                w << (k ? " " : "") << site_str(mask_sites[k], 2);
            w << "]";

            if (!s.reached()) {
                out.ok = false;
                out.witness = w.str() + " engine=NotReached";
                return;
            }
            if (!parity_matches(*s.value, l1_dist(src, dst))) {
                out.ok = false;
                out.witness = w.str() + " parity/distance violated, engine=" +
                              std::to_string(*s.value);
                return;
            }
            const WalkField oracle_field =
                o.corrupt_stream_hook
                    ? WalkField(2, o.master_seed,
                                static_cast<std::uint64_t>(i) + kCorruptReplicaShift)
                    : field;
            const auto oracle =
                dijkstra_oracle(oracle_field, src, dst, mask, *s.value, *s.value);
            if (!oracle || *oracle != *s.value) {
                out.ok = false;
                w << " engine=" << *s.value
                  << " oracle=" << (oracle ? std::to_string(*oracle) : "NotReached");
                out.witness = w.str();
            }
        });
}

CheckOutcome check_genealogy(const VerifyOptions& o) {
    return run_cases(
        "genealogy", o.sizes.genealogy_samples, o.workers,
        [&](std::int64_t i, InstanceOutcome& out) {
            DetRng rng(o.master_seed, 0x6E0A, static_cast<std::uint64_t>(i));
            Site x;
            do {
                x = rng.nonzero_site_in_box(2, 16);
            } while (l1_norm(x) > 32);
            const WalkField field(2, o.master_seed, static_cast<std::uint64_t>(i));
            static thread_local PassageEngine engine;
            const Site origin;
            const PassageSample s = engine.run_adaptive(field, origin, x, FrogMask(), PassageEngine::kDefaultHorizonCap);

            const auto fail = [&](const std::string& why) {
                out.ok = false;
                std::ostringstream w;
                w << "genealogy seed=" << o.master_seed << " instance=" << i
                  << " x=" << site_str(x, 2) << " " << why;
                out.witness = w.str();
            };

            if (!s.reached()) return fail("NotReached");
            if (s.genealogy.front() != origin || s.genealogy.back() != x)
                return fail("endpoints wrong");
            std::int64_t sum = 0;
            for (std::size_t k = 0; k + 1 < s.genealogy.size(); ++k) {
                const std::int64_t hop = s.hop_times[k];
                const std::int64_t gap = l1_dist(s.genealogy[k], s.genealogy[k + 1]);
                if (!parity_matches(hop, gap)) return fail("hop parity/distance");
                sum += hop;
            }
            if (sum != *s.value) return fail("hop sum != T");
            if (!parity_matches(*s.value, l1_norm(x))) return fail("T parity/distance");

            // Parent recursion on the full activation table, replayed
            // against the raw walks.
            const auto& recs = engine.activations();
            for (const auto& rec : recs) {
                if (rec.parent < 0) continue;
                const auto& par = recs[static_cast<std::size_t>(rec.parent)];
                const std::int64_t diff = rec.time - par.time;
                if (diff <= 0) return fail("parent not strictly earlier");
                const auto t = hitting_time(field.key_for(par.site), rec.site, diff);
                if (!t || *t != diff) return fail("activation time != parent + t");
            }
        });
}

CheckOutcome check_subadditivity(const VerifyOptions& o) {
    return run_cases(
        "subadditivity", o.sizes.subadditivity_triples, o.workers,
        [&](std::int64_t i, InstanceOutcome& out) {
            DetRng rng(o.master_seed, 0x5ADD, static_cast<std::uint64_t>(i));
            const Site x = rng.site_in_box(2, 12);
            const Site y = rng.site_in_box(2, 12);
            const WalkField field(2, o.master_seed, static_cast<std::uint64_t>(i));
            static thread_local PassageEngine engine;
            const SubadditivityWitness w =
                subadditivity_check(engine, field, x, y,
                                    PassageEngine::kDefaultHorizonCap);
            if (!w.resolved || !w.holds) {
                out.ok = false;
                std::ostringstream os;
                os << "subadditivity seed=" << o.master_seed << " instance=" << i
                   << " x=" << site_str(x, 2) << " y=" << site_str(y, 2);
                if (!w.resolved)
                    os << " unresolved";
                else
                    os << " T(0,x+y)=" << w.t_direct << " T(0,x)=" << w.t_first
                       << " T(x,x+y)=" << w.t_second;
                out.witness = os.str();
            }
        });
}

CheckOutcome check_mask_locality(const VerifyOptions& o) {
    return run_cases(
        "mask_locality", o.sizes.mask_locality_instances, o.workers,
        [&](std::int64_t i, InstanceOutcome& out) {
            DetRng rng(o.master_seed, 0x3A5C, static_cast<std::uint64_t>(i));
            const Site x = rng.nonzero_site_in_box(2, 10);
            const Site z = rng.nonzero_site_in_box(2, 10);
            const WalkField field(2, o.master_seed, static_cast<std::uint64_t>(i));
            static thread_local PassageEngine engine;
            const Site origin;

            const auto fail = [&](const std::string& why) {
                out.ok = false;
                std::ostringstream w;
                w << "mask_locality seed=" << o.master_seed << " instance=" << i
                  << " x=" << site_str(x, 2) << " z=" << site_str(z, 2) << " " << why;
                out.witness = w.str();
            };

            const PassageSample base = engine.run_adaptive(field, origin, x, FrogMask(), PassageEngine::kDefaultHorizonCap);
            if (!base.reached()) return fail("base NotReached");
            const std::int64_t t = *base.value;

            // Monotonicity, and exact equality off the genealogy.
            const PassageSample masked = removed_passage_time(
                engine, field, origin, x, z, PassageEngine::kDefaultHorizonCap);
            if (!masked.reached()) return fail("masked NotReached");
            if (*masked.value < t) return fail("T^[z] < T");
            bool interior = false;
            for (std::size_t k = 1; k + 1 < base.genealogy.size(); ++k)
                if (base.genealogy[k] == z) interior = true;
            if (!interior && *masked.value != t)
                return fail("z off the genealogy but T^[z] != T");

            // Locality: re-keying any walks outside B(0, T+1) is
            // invisible. Re-key a whole shell just beyond plus a few far
            // sites.
            WalkField rekeyed = field;
            const int shell_hi = static_cast<int>(t) + 6;
            for (const Site& s : box_sites(2, shell_hi)) {
                const std::int64_t r = l1_norm(s);
                if (r > t + 1 && r <= shell_hi) rekeyed.rekey(s, 7);
            }
            rekeyed.rekey(Site(static_cast<std::int32_t>(t) + 50, 0), 7);
            rekeyed.rekey(Site(0, -static_cast<std::int32_t>(t) - 50), 7);
            const PassageSample again = engine.run_adaptive(rekeyed, origin, x, FrogMask(), PassageEngine::kDefaultHorizonCap);
            if (!again.reached() || *again.value != t ||
                again.genealogy != base.genealogy || again.hop_times != base.hop_times)
                return fail("re-keying outside B(0,T+1) changed the sample");

            // Truncation stability: doubling the horizon after success.
            const PassageSample wide =
                engine.run(field, origin, x, FrogMask(), 2 * base.horizon);
            if (!wide.reached() || *wide.value != t ||
                wide.genealogy != base.genealogy || wide.hop_times != base.hop_times ||
                wide.max_jump != base.max_jump ||
                wide.frontier_radius != base.frontier_radius)
                return fail("doubling the horizon changed the sample");
        });
}

CheckOutcome check_t2_reduction(const VerifyOptions& o) {
    return run_cases(
        "t2_reduction", o.sizes.t2_instances, o.workers,
        [&](std::int64_t i, InstanceOutcome& out) {
            DetRng rng(o.master_seed, 0x7272, static_cast<std::uint64_t>(i));
            Site v;
            do {
                v = rng.nonzero_site_in_box(2, 4);
            } while (l1_norm(v) > 4);
            const WalkField field(2, o.master_seed, static_cast<std::uint64_t>(i));
            static thread_local PassageEngine engine;
            const Site origin;
            const auto reduced =
                t2(engine, field, origin, v, PassageEngine::kDefaultHorizonCap);
            const auto swept =
                t2_exhaustive(engine, field, origin, v, PassageEngine::kDefaultHorizonCap);
            if (!reduced || !swept || *reduced != *swept) {
                out.ok = false;
                std::ostringstream w;
                w << "t2_reduction seed=" << o.master_seed << " instance=" << i
                  << " v=" << site_str(v, 2)
                  << " reduction=" << (reduced ? std::to_string(*reduced) : "NotReached")
                  << " sweep=" << (swept ? std::to_string(*swept) : "NotReached");
                out.witness = w.str();
            }
        });
}

CheckOutcome check_t1_coupling(const VerifyOptions& o) {
    return run_cases(
        "t1_coupling", o.sizes.t1_coupling_instances, o.workers,
        [&](std::int64_t i, InstanceOutcome& out) {
            DetRng rng(o.master_seed, 0x71C0, static_cast<std::uint64_t>(i));
            const Site v = rng.nonzero_site_in_box(2, 6);
            const WalkField field(2, o.master_seed, static_cast<std::uint64_t>(i));
            static thread_local PassageEngine engine;
            const Site u;
            const auto resampled = resampled_source_passage(
                engine, field, u, v, 1, PassageEngine::kDefaultHorizonCap);
            const auto bound = t1(engine, field, u, v, PassageEngine::kDefaultHorizonCap);
            if (!resampled || !bound || *resampled > *bound) {
                out.ok = false;
                std::ostringstream w;
                w << "t1_coupling seed=" << o.master_seed << " instance=" << i
                  << " v=" << site_str(v, 2) << " resampled="
                  << (resampled ? std::to_string(*resampled) : "NotReached")
                  << " t1=" << (bound ? std::to_string(*bound) : "NotReached");
                out.witness = w.str();
            }
        });
}

CheckOutcome check_percolation(const VerifyOptions& o) {
    const std::int64_t fields = o.sizes.perc_fields;
    const std::int64_t tiny = o.sizes.perc_tiny_instances;
    return run_cases(
        "percolation", fields + tiny, o.workers,
        [&](std::int64_t i, InstanceOutcome& out) {
            const auto fail = [&](const std::string& why) {
                out.ok = false;
                std::ostringstream w;
                w << "percolation seed=" << o.master_seed << " instance=" << i << " "
                  << why;
                out.witness = w.str();
            };

            if (i >= fields) {
                // Exact-search cross-check on tiny instances, and the
                // open-restriction losslessness.
                const std::int64_t j = i - fields;
                const double ps[3] = {0.25, 0.4, 0.55};
                const int L = 3 + static_cast<int>(j % 2);
                const SiteField f = gen_independent_field(
                    absorb(o.master_seed, 0xABCD0000ull + static_cast<std::uint64_t>(j)),
                    2, 5, ps[j % 3]);
                const int bnb = max_path_weight(f, L).weight;
                const int all = max_path_weight_exhaustive(f, L);
                const int open = max_path_weight_open_exhaustive(f, L);
                if (bnb != all || open != all)
                    fail("bnb=" + std::to_string(bnb) + " exhaustive=" +
                         std::to_string(all) + " open=" + std::to_string(open) +
                         " L=" + std::to_string(L));
                return;
            }

            PercConfig cfg;
            cfg.d = 2;
            cfg.master_seed = absorb(o.master_seed, 0xFE1D0000ull);
            cfg.L = 3 + static_cast<int>(i % 4);
            cfg.M = 1 + static_cast<int>(i % 2);
            if (i % 37 == 0) {
                cfg.field_kind = "frog";
            } else if (i % 3 == 2) {
                cfg.field_kind = "windowed";
                cfg.p = 0.25;
            } else {
                const double ps[4] = {0.15, 0.3, 0.45, 0.6};
                cfg.field_kind = "independent";
                cfg.p = ps[(i / 3) % 4];
            }
            const int radius =
                std::max(tessellation_field_radius(cfg.L, cfg.M), (cfg.d + 1) * cfg.L);
            const SiteField field = make_perc_field(cfg, i, radius);

            const PathMax xl = max_path_weight(field, cfg.L);
            const int animal_l = (cfg.d + 1) * cfg.L;
            if (animal_l + 1 <= kAnimalCellCap) {
                const int n_exact = max_animal_weight(field, animal_l);
                if (xl.weight > n_exact)
                    return fail("X_L > N: X=" + std::to_string(xl.weight) +
                                " N=" + std::to_string(n_exact) +
                                " L=" + std::to_string(cfg.L) + " kind=" + cfg.field_kind);
            } else {
                const AnimalCover cover = path_cover_animal(field, xl.path);
                if (static_cast<int>(cover.cells.size()) > animal_l + 1)
                    return fail("path cover exceeds (d+1)L+1 cells");
                if (xl.weight > cover.weight)
                    return fail("path cover dropped weight");
            }

            const TessellationReport tess = tessellation_bound_check(field, cfg.L, cfg.M);
            if (!tess.holds)
                return fail("tessellation bound: X_L=" + std::to_string(tess.x_l) +
                            " bound=" + std::to_string(tess.bound) +
                            " L=" + std::to_string(cfg.L) + " M=" + std::to_string(cfg.M) +
                            " kind=" + cfg.field_kind);
        });
}

}  // namespace

VerifySizes VerifySizes::scaled(int factor) const {
    const auto cut = [factor](int v) { return std::max(1, v / factor); };
    VerifySizes s;
    s.engine_oracle_instances = cut(engine_oracle_instances);
    s.genealogy_samples = cut(genealogy_samples);
    s.subadditivity_triples = cut(subadditivity_triples);
    s.mask_locality_instances = cut(mask_locality_instances);
    s.t2_instances = cut(t2_instances);
    s.t1_coupling_instances = cut(t1_coupling_instances);
    s.perc_fields = cut(perc_fields);
    s.perc_tiny_instances = cut(perc_tiny_instances);
    return s;
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = {
        "engine_oracle", "genealogy",   "subadditivity", "mask_locality",
        "t2_reduction",  "t1_coupling", "percolation"};
    return names;
}

bool is_known_check(const std::string& name) {
    const auto& names = all_check_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckOutcome> run_verify_battery(const VerifyOptions& opts) {
    std::vector<CheckOutcome> outcomes;
    for (const auto& name : opts.battery) {
        if (name == "engine_oracle")
            outcomes.push_back(check_engine_oracle(opts));
        else if (name == "genealogy")
            outcomes.push_back(check_genealogy(opts));
        else if (name == "subadditivity")
            outcomes.push_back(check_subadditivity(opts));
        else if (name == "mask_locality")
            outcomes.push_back(check_mask_locality(opts));
        else if (name == "t2_reduction")
            outcomes.push_back(check_t2_reduction(opts));
        else if (name == "t1_coupling")
            outcomes.push_back(check_t1_coupling(opts));
        else if (name == "percolation")
            outcomes.push_back(check_percolation(opts));
        else
            throw std::invalid_argument("unknown verify check: " + name);
    }
    return outcomes;
}

}  // namespace froglab
