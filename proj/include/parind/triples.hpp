#pragma once

#include <string>
#include <utility>

#include "parind/parabolic.hpp"

namespace parind {

struct SigmaFlags {
  bool supercuspidal = true;
  bool irreducible_admissible = true;
  // sigma is the extension e_P(sigma_min) of a supercuspidal representation
  // of a smaller Levi. Lets the rules accept non-e-minimal descriptors by
  // passing to the e-minimal core first.
  bool core_supercuspidal = false;

  bool operator==(const SigmaFlags&) const = default;
};

// Combinatorial shadow of a smooth representation sigma of a Levi M:
//   levi        Delta_M, tagged with the group the triple lives in;
//   trivial_on  the simple roots alpha (all of Delta) for which Z cap M'_alpha
//               acts trivially on sigma;
//   flags       supercuspidal / irreducible admissible.
// Supercuspidal descriptors must be e-minimal with Delta_M orthogonal to
// Delta_sigma; anything else is rejected with InvalidDescriptor.
class SigmaDescriptor {
 public:
  SigmaDescriptor(ParabolicSet levi, SimpleMask trivial_on, SigmaFlags flags = {});

  // The trivial character of Z: minimal Levi, trivial on every root.
  static SigmaDescriptor trivial_character(const ParabolicSet& ambient_minimal);

  const ParabolicSet& levi() const { return levi_; }
  SimpleMask trivial_on() const { return trivial_on_; }
  const SigmaFlags& flags() const { return flags_; }
  bool supercuspidal() const { return flags_.supercuspidal; }

  // Delta_sigma inside the ambient group: trivial roots off Delta_M.
  SimpleMask delta_sigma() const;

  SigmaDescriptor retagged(SimpleMask ambient) const;

  bool operator==(const SigmaDescriptor& other) const;

 private:
  ParabolicSet levi_;
  SimpleMask trivial_on_;
  SigmaFlags flags_;
};

// Largest standard parabolic containing P to which sigma extends.
ParabolicSet p_sigma(const SigmaDescriptor& sigma);

struct MinimalForm {
  ParabolicSet levi;
  SigmaDescriptor sigma;
};

// e-minimal core: drops from Delta_P every root on which sigma is trivial.
MinimalForm minimize(const SigmaDescriptor& sigma);
bool is_e_minimal(const SigmaDescriptor& sigma);

// Throws NotEMinimal for non-e-minimal input; otherwise reports whether
// Delta_P and Delta_sigma are orthogonal.
bool check_e_minimal_orthogonality(const SigmaDescriptor& sigma);

// (P, sigma, Q). Plain data; validate_triple checks P <= Q <= P(sigma).
struct GTriple {
  ParabolicSet P;
  SigmaDescriptor sigma;
  ParabolicSet Q;

  bool operator==(const GTriple&) const = default;
};

struct ValidatedTriple {
  GTriple triple;
  ParabolicSet p_sigma;
};

ValidatedTriple validate_triple(const GTriple& t);
GTriple minimize_triple(const GTriple& t);

GTriple make_triple(const ParabolicSet& P, SimpleMask trivial_on, const ParabolicSet& Q,
                    SigmaFlags flags = {});

// "I_G({a1}, σ, {a1,a2})", or "I_M{a1,a2}(...)" for a triple of a proper Levi.
std::string format_triple(const GTriple& t);

}  // namespace parind
