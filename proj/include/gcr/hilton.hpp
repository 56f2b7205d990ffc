#ifndef GCR_HILTON_HPP
#define GCR_HILTON_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "gcr/errors.hpp"

namespace gcr {

// Finitely generated abelian group stored in primary decomposition: a free
// rank plus a multiset of prime-power cyclic orders. Printing reassembles
// composite orders from a preferred list (24, 15, 12) so ubiquitous groups
// like Z/24 read naturally.
struct AbGroupExpr {
    long free_rank = 0;
    std::map<mpz_class, long> primary;  // prime power -> multiplicity

    static AbGroupExpr zero() { return {}; }
    static AbGroupExpr free_part(long rank);
    static AbGroupExpr cyclic(const mpz_class& d);  // d >= 2

    void add_cyclic(const mpz_class& d);
    AbGroupExpr operator+(const AbGroupExpr& o) const;  // direct sum
    bool operator==(const AbGroupExpr& o) const {
        return free_rank == o.free_rank && primary == o.primary;
    }
    bool is_zero() const { return free_rank == 0 && primary.empty(); }

    std::string to_string() const;

    // Strict grammar: `0` or `+`-separated terms Z, Z^k, Z/d, (Z/d)^k.
    static AbGroupExpr parse(const std::string& text);
};

struct LyndonWord {
    std::vector<int> letters;  // indices into the generator alphabet
    int weight = 0;
};

// All Lyndon words over an alphabet with the given positive letter weights,
// of total weight <= max_weight, ordered by (weight, lexicographic).
std::vector<LyndonWord> lyndon_basis(const std::vector<int>& weights, int max_weight);

struct WedgeOfSpheres {
    std::vector<int> dims;  // each >= 2
    explicit WedgeOfSpheres(std::vector<int> dimensions);
};

// pi_n(S^m) lookup table. Entries below the diagonal (n < m) are zero by
// definition and need not be stored; any other missing entry is an error.
class SphereTable {
public:
    static SphereTable parse(const std::string& text);
    static const SphereTable& builtin();

    AbGroupExpr pi(int n, int m) const;
    bool has(int n, int m) const;

private:
    std::map<std::pair<int, int>, AbGroupExpr> entries_;
};

// Hilton's theorem: pi_n of a wedge of spheres is the direct sum of
// pi_n(S^{w+1}) over Lyndon words of weight w <= n-1 in an alphabet with
// one letter of weight dim-1 per sphere.
AbGroupExpr wedge_homotopy(const WedgeOfSpheres& X, int n, const SphereTable& table);

// pi_n of B_com O(2): the wedge S^2 v S^2 v S^3 contribution plus
// pi_n(BO(2)) (Z/2 at n=1, Z at n=2, zero above).
AbGroupExpr bcom_o2_homotopy(int n, const SphereTable& table = SphereTable::builtin());

// Text of the built-in sphere table (the same data shipped as a file).
const std::string& builtin_sphere_table_text();

}  // namespace gcr

#endif
