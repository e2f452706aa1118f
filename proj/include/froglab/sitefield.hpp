#ifndef FROGLAB_SITEFIELD_HPP
#define FROGLAB_SITEFIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "froglab/frog_engine.hpp"
#include "froglab/lattice.hpp"
#include "froglab/walkfield.hpp"

namespace froglab {

/// Realization of Bernoulli site indicators {I_x} on the box B(radius),
/// with a declared dependence range M (0 = independent) and a density
/// descriptor (p for independent fields, q_M otherwise; NaN if unknown).
class SiteField {
  public:
    SiteField(int d, int radius, int dependence_range, std::uint64_t seed, double density);

    int dim() const { return d_; }
    int radius() const { return radius_; }
    int dependence_range() const { return m_; }
    std::uint64_t seed() const { return seed_; }
    double density() const { return density_; }
    void set_density(double q) { density_ = q; }

    bool in_domain(const Site& s) const;
    bool at(const Site& s) const { return bits_[index(s)] != 0; }
    void set(const Site& s, bool v) { bits_[index(s)] = v ? 1 : 0; }

    std::int64_t open_count() const;
    std::int64_t site_count() const { return static_cast<std::int64_t>(bits_.size()); }

  private:
    std::size_t index(const Site& s) const;

    int d_;
    int radius_;
    int m_;
    std::uint64_t seed_;
    double density_;
    std::vector<std::uint8_t> bits_;
};

/// i.i.d. Bernoulli(p) indicators on B(L), keyed per site.
SiteField gen_independent_field(std::uint64_t seed, int d, int L, double p);

/// Synthetic M-dependent field: moving-window maximum of an i.i.d.
/// Bernoulli(p0) field over l1 windows of radius floor(M/2), so sites
/// farther than M apart have disjoint windows and are independent by
/// construction. The density descriptor is the exact q_M of the window
/// maximum.
SiteField gen_windowed_field(std::uint64_t seed, int d, int L, int M, double p0);

/// Frog-derived indicators: I_y = 1 iff some z with |z-y|_1 <= M has
/// T(y,z) = t(y,z) = M on the shared walk field. Only walks in B(y, M)
/// are consulted, so the field carries declared dependence range M.
/// Density descriptor: the empirical mean over B(L).
SiteField gen_frog_indicator_field(PassageEngine& engine, const WalkField& field, int L,
                                   int M);

/// Flat text format: header "d L M seed", then one "x1 .. xd bit" line
/// per site of B(L) in lexicographic order. Bit-exact round trip.
std::string serialize_field(const SiteField& field);
SiteField parse_field(std::istream& in);
SiteField parse_field(const std::string& text);

}  // namespace froglab

#endif
