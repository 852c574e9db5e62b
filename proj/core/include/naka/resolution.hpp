#ifndef NAKA_RESOLUTION_HPP
#define NAKA_RESOLUTION_HPP

#include "naka/functors.hpp"

namespace naka {

/// Homologically indexed complex: modules C_lo..C_hi with differentials
/// d_i: C_i -> C_{i-1}. Consecutive composites are checked to vanish.
struct ChainComplex {
    long lo = 0;
    std::vector<ModuleRep> modules;       // modules[k] = C_{lo+k}
    std::vector<ModuleMap> differentials;  // differentials[k] = d_{lo+k+1}
    long hi() const { return lo + static_cast<long>(modules.size()) - 1; }
    const ModuleRep& at(long i) const { return modules[static_cast<std::size_t>(i - lo)]; }
    const ModuleMap& diff_into(long i) const {  // d_{i+1}: C_{i+1} -> C_i
        return differentials[static_cast<std::size_t>(i - lo)];
    }
};
void check_complex(const ChainComplex& c);

/// Projective resolution ... -> P_1 -> P_0 -> m -> 0, possibly truncated.
struct Resolution {
    ChainComplex complex;     // degrees 0..len
    ModuleMap augmentation;   // P_0 -> m
    bool minimal = false;
    bool complete = false;               // reached a zero kernel
    std::vector<ModuleRep> syzygies;     // syzygies[i] = Omega^{i+1}(m)
    std::size_t length() const { return complex.modules.size() - 1; }
};
Resolution projective_resolution(const ModuleRep& m, std::size_t max_len);

/// Injective coresolution 0 -> m -> I^0 -> I^1 -> ..., via the opposite
/// algebra and duality.
struct Coresolution {
    std::vector<ModuleRep> modules;  // I^0, I^1, ...
    std::vector<ModuleMap> maps;     // delta^i: I^i -> I^{i+1}
    ModuleMap augmentation;          // m -> I^0
    bool minimal = false;
    bool complete = false;
    std::vector<ModuleRep> cosyzygies;  // cosyzygies[i] = coker into position i+1
};
Coresolution injective_coresolution(const ModuleRep& m, std::size_t max_len);

/// Per-degree dimensions of a derived functor of nu or nu^-.
struct DerivedTable {
    std::string functor_tag;  // "L nu" or "R nu^-"
    std::vector<std::size_t> dims;  // index i = dimension in degree i
    std::size_t bound = 0;
    bool resolution_complete = false;  // vanishing beyond the table is certain
    std::size_t max_nonzero() const {
        std::size_t s = 0;
        for (std::size_t i = 0; i < dims.size(); ++i)
            if (dims[i] != 0) s = i;
        return s;
    }
};
DerivedTable left_derived_nu(const ModuleRep& m, std::size_t bound);
DerivedTable right_derived_nu_minus(const ModuleRep& m, std::size_t bound);

/// Tor_i computed by resolving the FIRST argument (a right module).
std::size_t tor_dim(std::size_t i, const ModuleRep& right, const ModuleRep& left);
/// Ext^i computed by resolving the FIRST argument (both left modules).
std::size_t ext_dim(std::size_t i, const ModuleRep& x, const ModuleRep& m);

struct DimResult {
    bool finite = false;
    std::size_t value = 0;  // meaningful when finite; otherwise the bound used
    bool operator==(const DimResult&) const = default;
};
DimResult proj_dim(const ModuleRep& m, std::size_t bound);
DimResult inj_dim(const ModuleRep& m, std::size_t bound);

bool is_projective(const ModuleRep& m);
bool is_injective(const ModuleRep& m);

/// Default derived-functor bound: 2 dim(Lambda) + 2.
std::size_t default_bound(const AlgebraPtr& a);

}  // namespace naka

#endif
