#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfe/moment_model.hpp"
#include "pfe/rational.hpp"

namespace pfe {

enum class StirlingFamily { s1, s2, s1_deg, s2_deg, s1_prob, s2_prob, s1_prob_deg, s2_prob_deg };

std::string stirling_family_name(StirlingFamily f);

// Lower-triangular (n,k)-array for one Stirling family at one parameter
// setting. Out-of-range indices (k > n or k < 0, or n < 0) read as 0;
// n beyond nmax is an error.
class StirlingTable {
public:
    StirlingTable(StirlingFamily family, unsigned nmax,
                  std::optional<Rational> lambda, std::optional<MomentModel> model);

    StirlingFamily family() const { return family_; }
    unsigned nmax() const { return nmax_; }
    const std::optional<Rational>& lambda() const { return lambda_; }
    const std::optional<MomentModel>& model() const { return model_; }

    Rational value(long n, long k) const;
    void set_value(unsigned n, unsigned k, Rational v);

    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

private:
    StirlingFamily family_;
    unsigned nmax_;
    std::optional<Rational> lambda_;
    std::optional<MomentModel> model_;
    std::vector<std::vector<Rational>> rows_;
};

// Classical triangles, by their standard recurrences.
StirlingTable classical_s2(unsigned nmax);
StirlingTable classical_s1(unsigned nmax);  // signed

// Degenerate triangles: the second kind from powers of e_lambda(t)-1, the
// first kind as its lower-triangular matrix inverse.
StirlingTable degenerate_s2(unsigned nmax, const Rational& lambda);
StirlingTable degenerate_s1(unsigned nmax, const Rational& lambda);

// Probabilistic triangles: the second kind from powers of E[e^{Yt}]-1, the
// first kind from powers of its compositional inverse.
StirlingTable probabilistic_s2(const MomentModel& m, unsigned nmax);
StirlingTable probabilistic_s1(const MomentModel& m, unsigned nmax);
StirlingTable probabilistic_degenerate_s2(const MomentModel& m, const Rational& lambda,
                                          unsigned nmax);
StirlingTable probabilistic_degenerate_s1(const MomentModel& m, const Rational& lambda,
                                          unsigned nmax);

// Alternating-sum formula with E[S_j^n] taken from MGF powers; an
// independent route to the same numbers as probabilistic_s2.
Rational probabilistic_s2_direct(const MomentModel& m, unsigned n, unsigned k);

// Lower-triangular matrix inverse; swaps an S2-type family tag for the
// matching S1-type tag and vice versa.
StirlingTable table_invert(const StirlingTable& t);

bool tables_equal(const StirlingTable& a, const StirlingTable& b);

}  // namespace pfe
