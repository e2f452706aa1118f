#include "froglab/sitefield.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "froglab/rng.hpp"

namespace froglab {

namespace {

std::uint64_t site_key(std::uint64_t seed, std::uint64_t tag, const Site& s) {
    std::uint64_t h = absorb(tag, seed);
    for (int i = 0; i < kMaxDim; ++i)
        h = absorb(h, static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.c[i])));
    return h;
}

constexpr std::uint64_t kIndepTag = 0x736974656669656Cull;
constexpr std::uint64_t kWindowTag = 0x77696E646F776669ull;

/// Sites of the l1 ball of radius r (subset of B(r)).
std::vector<Site> l1_ball(int d, int r) {
    std::vector<Site> out;
    for (const Site& s : box_sites(d, r))
        if (l1_norm(s) <= r) out.push_back(s);
    return out;
}

}  // namespace

SiteField::SiteField(int d, int radius, int dependence_range, std::uint64_t seed,
                     double density)
    : d_(d), radius_(radius), m_(dependence_range), seed_(seed), density_(density) {
    if (d < 1 || d > kMaxDim) throw std::invalid_argument("SiteField: bad dimension");
    if (radius < 0) throw std::invalid_argument("SiteField: negative radius");
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(2 * radius + 1);
    bits_.assign(total, 0);
}

bool SiteField::in_domain(const Site& s) const {
    for (int i = 0; i < d_; ++i)
        if (std::abs(s.c[static_cast<std::size_t>(i)]) > radius_) return false;
    for (int i = d_; i < kMaxDim; ++i)
        if (s.c[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

std::size_t SiteField::index(const Site& s) const {
    std::size_t idx = 0;
    std::size_t stride = 1;
    // Lexicographic order of box_sites: the last axis varies fastest.
    for (int i = d_ - 1; i >= 0; --i) {
        const std::int64_t rel =
            static_cast<std::int64_t>(s.c[static_cast<std::size_t>(i)]) + radius_;
        if (rel < 0 || rel > 2 * radius_) throw std::out_of_range("SiteField: site outside");
        idx += static_cast<std::size_t>(rel) * stride;
        stride *= static_cast<std::size_t>(2 * radius_ + 1);
    }
    return idx;
}

std::int64_t SiteField::open_count() const {
    std::int64_t n = 0;
    for (auto b : bits_) n += b;
    return n;
}

SiteField gen_independent_field(std::uint64_t seed, int d, int L, double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_independent_field: bad p");
    SiteField f(d, L, 0, seed, p);
    for (const Site& s : box_sites(d, L))
        f.set(s, to_unit(site_key(seed, kIndepTag, s)) < p);
    return f;
}

SiteField gen_windowed_field(std::uint64_t seed, int d, int L, int M, double p0) {
    if (M < 1) throw std::invalid_argument("gen_windowed_field: M must be >= 1");
    if (p0 < 0.0 || p0 > 1.0) throw std::invalid_argument("gen_windowed_field: bad p0");
    const int wr = M / 2;
    const auto window = l1_ball(d, wr);
    const double q =
        1.0 - std::pow(1.0 - p0, static_cast<double>(window.size()));
    SiteField f(d, L, M, seed, q);
    for (const Site& s : box_sites(d, L)) {
        bool open = false;
        for (const Site& off : window) {
            if (to_unit(site_key(seed, kWindowTag, s + off)) < p0) {
                open = true;
                break;
            }
        }
        f.set(s, open);
    }
    return f;
}

SiteField gen_frog_indicator_field(PassageEngine& engine, const WalkField& field, int L,
                                   int M) {
    if (M < 1) throw std::invalid_argument("gen_frog_indicator_field: M must be >= 1");
    SiteField f(field.dim(), L, M, field.master_seed(), 0.0);
    std::int64_t open = 0;
    std::vector<Site> trail;
    for (const Site& y : box_sites(field.dim(), L)) {
        // t(y, z) = M for some z iff the site reached at step M is fresh.
        WalkStream walk(field.key_for(y));
        trail.assign(1, y);
        for (int j = 1; j < M; ++j) trail.push_back(walk.next());
        const Site z = walk.next();
        bool fresh = true;
        for (const Site& v : trail)
            if (v == z) {
                fresh = false;
                break;
            }
        if (!fresh) continue;
        // T <= t = M always; open iff no cheaper chain exists.
        PassageSample s = engine.run(field, y, z, FrogMask(), M);
        if (s.reached() && *s.value == M) {
            f.set(y, true);
            ++open;
        }
    }
    f.set_density(static_cast<double>(open) / static_cast<double>(f.site_count()));
    return f;
}

std::string serialize_field(const SiteField& field) {
    std::ostringstream os;
    os << field.dim() << ' ' << field.radius() << ' ' << field.dependence_range() << ' '
       << field.seed() << '\n';
    for (const Site& s : box_sites(field.dim(), field.radius())) {
        for (int i = 0; i < field.dim(); ++i)
            os << s.c[static_cast<std::size_t>(i)] << ' ';
        os << (field.at(s) ? 1 : 0) << '\n';
    }
    return os.str();
}

SiteField parse_field(std::istream& in) {
    int d = 0, radius = 0, m = 0;
    std::uint64_t seed = 0;
    if (!(in >> d >> radius >> m >> seed))
        throw std::runtime_error("parse_field: bad header");
    SiteField f(d, radius, m, seed, std::numeric_limits<double>::quiet_NaN());
    const auto sites = box_sites(d, radius);
    for (std::size_t k = 0; k < sites.size(); ++k) {
        Site s;
        for (int i = 0; i < d; ++i) {
            if (!(in >> s.c[static_cast<std::size_t>(i)]))
                throw std::runtime_error("parse_field: truncated site line");
        }
        int bit = 0;
        if (!(in >> bit) || (bit != 0 && bit != 1))
            throw std::runtime_error("parse_field: bad indicator bit");
        if (s != sites[k]) throw std::runtime_error("parse_field: site order mismatch");
        f.set(s, bit != 0);
    }
    return f;
}

SiteField parse_field(const std::string& text) {
    std::istringstream is(text);
    return parse_field(is);
}

}  // namespace froglab
