#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reflecta/complexes.hpp"
#include "reflecta/reflection_rep.hpp"

namespace reflecta {

class FrameError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// lambda_i lies on every reflecting hyperplane H_j, j != i.
struct Frame {
    std::vector<CycloVector> vectors;
};

// Throws FrameError unless each lambda_i is nonzero, fixed by r_j for j != i
// and moved by r_i.
void validate_frame(const LinearGroup& lg, const Frame& frame);
// Canonical basis vector of each line H_1 ∩ .. (skip i) .. ∩ H_l; throws
// FrameError when one of these intersections is not a line.
Frame axis_frame(const LinearGroup& lg);
// Extreme rays of the chamber cut out by the generator roots, normalized so
// <lambda_i, alpha_i> > 0 with <alpha_i, alpha_j> <= 0. Throws FrameError for
// non-real representations or generators of order other than 2.
Frame weyl_frame(const LinearGroup& lg);
Frame scaled(const Frame& frame, const std::vector<Cyclotomic>& scalars);

struct EmbeddedComplex {
    CosetComplex complex;
    std::vector<Face> vertex_faces;
    std::vector<CycloVector> coords;          // g lambda_i for the vertex g W_{R\{r_i}}
    std::vector<std::vector<int>> simplices;  // maximal faces as sorted vertex ids
    std::vector<Face> simplex_faces;

    int vertex_index(const Face& v) const;
    // (Re x_1, .., Re x_l, Im x_1, .., Im x_l), exact.
    std::vector<Cyclotomic> real_coords(int v) const;
    bool rational() const;
};

// Throws FrameError when the frame is invalid.
EmbeddedComplex embed(const CosetComplex& cx, const LinearGroup& lg, const Frame& frame);

enum class Verdict { Pass, Fail, Indeterminate };
std::string to_string(Verdict v);

struct WellFramedOptions {
    // Float LP values at most tol count as zero, values above band as
    // positive; anything in between is INDETERMINATE.
    double tol = 1e-9;
    double band = 1e-6;
    unsigned jobs = 1;
};

struct WellFramedReport {
    Verdict verdict = Verdict::Pass;
    bool exact = false;
    std::size_t pairs_checked = 0;
    std::size_t indeterminate = 0;
    std::optional<std::pair<Face, Face>> witness;
    std::string reason;
};

// Realized simplices are nondegenerate, vertices distinct, and any two
// maximal simplices meet exactly in the hull of their common vertices.
// Coincidences and degeneracy are decided exactly; pair intersections use an
// exact rational LP when every coordinate is rational and a float LP
// otherwise.
WellFramedReport well_framed_check(const EmbeddedComplex& ecx, const WellFramedOptions& opt = {});

struct StratificationReport {
    bool pass = true;
    std::size_t lattice_size = 0;
    std::size_t face_spans = 0;      // distinct spans of realized faces
    std::vector<Subspace> missing;   // flats of the arrangement with no face of matching dimension inside
    std::vector<Subspace> extra;     // face spans outside the arrangement lattice
};

// Every X in the intersection lattice contains the image of a face of
// dimension dim X - 1.
StratificationReport strongly_stratified_check(const LinearGroup& lg, const CosetComplex& cx, const Frame& frame);

// S_{n+1} generated by the transpositions (i, n+1), acting on the sum-zero
// hyperplane, with frame alpha_i v_i where v_i is the i-th simplex vertex
// e_i - (e_1 + .. + e_{n+1}) / (n+1).
struct StarSystem {
    int n = 0;
    std::shared_ptr<const LinearGroup> group;
    Frame frame;
};
TablePtr star_table(int n);
// alpha_j = exp(i pi (j-1) / n)
std::vector<Cyclotomic> default_star_alphas(int n);
// Throws FrameError when two alphas are real multiples of each other.
StarSystem star_system(int n, const std::vector<Cyclotomic>& alphas);

}  // namespace reflecta
