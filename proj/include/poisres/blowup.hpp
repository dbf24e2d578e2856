#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "poisres/bivector.hpp"

namespace poisres::blowup {

using exactalg::Polynomial;
using poisson::Bivector;

// Blowup center Y = {x_{k+1} = ... = x_n = 0}: the first k coordinates span
// the center, the remaining n-k (codimension >= 2) are blown up.
struct Center {
    int nvars;
    int k;

    Center(int nvars, int k);

    int codim() const { return nvars - k; }
    // Chart indices j = k+1 .. n.
    std::vector<int> charts() const;
};

// Bivector in blowup-chart coordinates. Entry (s,t) holds num / z_j^pow with
// pow <= 2: the transform never produces worse than z_j^2, and cancellation
// is deferred to normalize().
class ChartBivector {
public:
    struct Entry {
        Polynomial num;
        int pow;
    };

    ChartBivector(int nvars, int j);

    int nvars() const { return nvars_; }
    int chart() const { return chart_; }
    const std::map<std::pair<int, int>, Entry>& entries() const { return entries_; }

    // Accepts any s != t (lower-triangle writes flip the numerator sign).
    void set(int s, int t, Polynomial num, int pow);
    Entry get(int s, int t) const;

    // Cancels z_j factors: while pow > 0 and z_j divides num, divide.
    void normalize();

    bool is_zero() const { return entries_.empty(); }
    std::string str() const;

private:
    int nvars_;
    int chart_;
    std::map<std::pair<int, int>, Entry> entries_;
};

bool operator==(const ChartBivector& a, const ChartBivector& b);

struct ChartFlag {
    int j;
    bool holomorphic;
};

struct Violation {
    std::string kind;          // "order0" or "order1"
    std::vector<int> indices;  // order0: [s,t]; order1: [l,m,s] for ∂_s g_lm,
                               // or [l,m,l2] when the matched normal
                               // derivatives ∂_l g_lm and ∂_l2 g_l2m differ
    std::string witness;       // the offending restricted polynomial
};

struct LiftReport {
    bool verdict;
    std::vector<ChartFlag> charts;
    std::vector<Violation> violations;
};

// Push-forward of θ to blowup chart j: z_i = x_i for i <= k and i = j,
// z_l = x_l / x_j otherwise.
ChartBivector chart_transform(const Bivector& theta, const Center& c, int j);

// True iff every coefficient clears its z_j power after normalization.
bool holomorphy_oracle(const ChartBivector& cb);

// Decides liftability through vanishing conditions along Y (order 0 always;
// order 1 when the codimension exceeds 2), and independently records the
// per-chart holomorphy flags. The two computations agree unless one of them
// is buggy; callers treat a mismatch as an internal error.
LiftReport lift_criterion(const Bivector& theta, const Center& c);

// The chart bivectors with denominators cleared, one per chart, in chart
// order. Throws std::domain_error when the criterion fails, and
// std::logic_error if lifting a Poisson input ever broke Jacobi.
std::vector<Bivector> lift_bivector(const Bivector& theta, const Center& c);

}  // namespace poisres::blowup
