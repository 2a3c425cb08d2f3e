#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wlax/laxop.hpp"
#include "wlax/report.hpp"

namespace wlax {

// so_N / sp_N on V with basis v_(i,h), 1<=i<=r, 1<=h<=p, ordered
// lexicographically.  The nilpotent is the rectangular one, f v_(i,h) = v_(i,h+1).
struct RectSetup {
    Family family = Family::SP;
    int r = 0, p = 0, N = 0;
    int epsilon = 0;
    bool case2 = false;     // alternative sign scheme, used for so with N even
    std::vector<int> eps;   // ε_(i,h) by coordinate

    int index(int i, int h) const { return (i - 1) * p + (h - 1); }  // 1-based pair -> coordinate
    int prime(int a) const { return N - 1 - a; }                      // (i,h)' = (r+1-i, p+1-h)
    int h_of(int a) const { return a % p + 1; }
    int i_of(int a) const { return a / p + 1; }
};

// Throws InvalidRectangle when the data does not describe a nilpotent of so/sp.
std::pair<RectSetup, GradedSetup> build_rect(Family f, int r, int p);

// F_(a),(b) = E_ab - ε_a ε_b E_{b'a'} as a matrix on V
QMatrix rect_F(const RectSetup& rs, int a, int b);

// Readings of the chain-sum formula.  Bits may be combined.
enum RectVariant : unsigned {
    Literal = 0,
    TildeLeading = 1,  // s = 0 term uses f~ like every other factor, not the bare generator
    UniformHalf = 2,   // f~ carries f/2 even when (a) = (b)', instead of f/(2c)
    Corrected = TildeLeading | UniformHalf,
};
std::string variant_name(unsigned v);

// Entries L_ij(z) from the chain sum, as an exact r x r polynomial matrix over U(g).
SeriesMatrix explicit_L(const UEARing& R, const RectSetup& rs, unsigned v = Corrected);

// Reduced explicit_L against the pipeline's L, rows v_(i,1), columns v_(j,p).
Report rect_cross_check(const UEARing& R, const RectSetup& rs, const LaxResult& lax_result,
                        unsigned v = Corrected);

}  // namespace wlax
