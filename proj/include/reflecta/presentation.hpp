#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace reflecta {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Generators r_0..r_{l-1} of orders p_i with braid relations of length q_ij.
struct GroupPresentation {
    int rank = 0;
    std::vector<int> orders;
    std::vector<std::vector<int>> braid;  // braid[i][j] for i != j, symmetric; 0 on the diagonal
    std::string label;

    bool is_real() const;
    // True when q_ij = 2 whenever |i - j| >= 2.
    bool is_linear() const;
    void validate() const;
};

// Relator words over letters 2*i (r_i) and 2*i+1 (r_i^{-1}).
std::vector<std::vector<int>> relators(const GroupPresentation& p);

// Accepts A<n> B<n> D<n> F4 H3 H4 I2(<m>) G(<r>,1,<n>) G4 G5 G6 G8 G25 G26
// and the generic form p0[q0]p1[q1]...pk.
GroupPresentation parse_symbol(const std::string& text);

// Presentation with the given orders and a linear diagram of braid lengths.
GroupPresentation linear_presentation(const std::vector<int>& orders, const std::vector<int>& links,
                                      const std::string& label);

}  // namespace reflecta
