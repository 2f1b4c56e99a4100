#pragma once

// Finitely generated presentations of archimedean lattice-ordered groups
// with strong unit inside C(K), for the three computable model spaces.
// Provides deterministic term enumeration, normal forms for the three
// structured families over the one-point compactification, class
// membership checks (Y, CR, M, HA, Proj) with exact or budget-qualified
// verdicts, cross-identity consistency checks, built-in presentations,
// and JSON (de)serialization.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "lgroup/alphan.hpp"
#include "lgroup/finite.hpp"
#include "lgroup/halfline.hpp"
#include "lgroup/predicates.hpp"
#include "lgroup/term.hpp"

namespace lgroup {

// Structured families over the one-point compactification of the
// positive integers; each fixes the eventual shape of elements:
//   FV : r + s*v  with v = 1/x on every point,
//   FA : r + s*a  with a = 1/x on evens and 0 on odds,
//   FAB: r + s*a + t*b  with b = 1/x^2 on evens and 0 on odds,
// in each case up to finitely many modified values on the naturals.
enum class Family { none, fv, fa, fab };

enum class ClassName { y, cr, m, ha, proj };

enum class VerdictStatus { holds_exact, holds_sampled, fails };

std::string to_string(Family f);
std::string to_string(ClassName c);
std::string to_string(VerdictStatus s);
std::optional<Family> family_from_string(const std::string& s);
std::optional<ClassName> class_from_string(const std::string& s);

inline std::vector<ClassName> all_classes() {
  return {ClassName::y, ClassName::cr, ClassName::m, ClassName::ha, ClassName::proj};
}

template <SpaceModel M>
struct TypedPresentation {
  M model;
  std::string name;  // label used in reports
  Family family = Family::none;
  // Ordered: enumeration and witness search follow this order.
  std::vector<std::pair<std::string, typename M::Element>> generators;
  typename M::Element unit_element;
};

template <SpaceModel M>
TypedPresentation<M> make_presentation(
    M model, std::string name, Family family,
    std::vector<std::pair<std::string, typename M::Element>> generators) {
  auto unit = model.unit();
  return TypedPresentation<M>{std::move(model), std::move(name), family,
                              std::move(generators), std::move(unit)};
}

using AlphaNPresentation = TypedPresentation<alphan::AlphaNModel>;
using HalfLinePresentation = TypedPresentation<halfline::HalfLineModel>;
using FinitePresentation = TypedPresentation<finite::FiniteModel>;

using GroupPresentation =
    std::variant<AlphaNPresentation, HalfLinePresentation, FinitePresentation>;

std::string presentation_name(const GroupPresentation& p);

// --- enumeration ------------------------------------------------------------

template <SpaceModel M>
struct EnumeratedElement {
  terms::TermPtr term;  // a shortest producing term (first found)
  typename M::Element value;
};

// Deterministic breadth-first enumeration of the elements generated by
// the presentation's generators, the constant pool {0, 1, -1, 1/2,
// -1/2, 2, -2} (multiples of the presentation unit), and the operations
// +, -, /\, \/, |.|, ordered by term size. Duplicates are removed by
// model equality; `budget` bounds the number of distinct elements.
template <SpaceModel M>
std::vector<EnumeratedElement<M>> enumerate_terms(const TypedPresentation<M>& p,
                                                  std::size_t budget = 2000);

// --- normal forms (one-point compactification families) ---------------------

class NotInFamily : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// g ≐ r + s*v | r + s*a | r + s*a + t*b, "≐" meaning: equal at all but
// finitely many naturals; `exceptional` records the modified values.
struct NormalForm {
  Family family = Family::none;
  Rat r, s, t;
  std::map<std::uint64_t, Rat> exceptional;
};

NormalForm to_normal_form(const alphan::AsymptoticSequence& g, Family family);
std::optional<NormalForm> try_normal_form(const alphan::AsymptoticSequence& g,
                                          Family family);
alphan::AsymptoticSequence from_normal_form(const NormalForm& nf);

// --- class checks -----------------------------------------------------------

struct ClassVerdict {
  ClassName cls = ClassName::y;
  VerdictStatus status = VerdictStatus::holds_sampled;
  std::uint64_t budget_used = 0;  // distinct elements examined
  // Failure data. Pair conditions (Y, M) fill both witnesses; element
  // conditions (CR, HA, Proj) fill only g. Term strings are empty when
  // the witness arose from a family representative rather than an
  // enumerated term.
  std::string witness_f_term, witness_g_term;
  std::string witness_f_desc, witness_g_desc;
  std::string condition;

  bool holds() const { return status != VerdictStatus::fails; }
};

// Verdict routes: (a) exact counterexample search over enumerated
// pairs/elements; (b) for family-tagged presentations, an exact decider
// by sign-pattern case analysis over normal forms; (c) for finite
// spaces, the element-wise clopen/dominance argument; otherwise the
// positive verdict is budget-qualified.
template <SpaceModel M>
ClassVerdict class_check_enumerated(const TypedPresentation<M>& p,
                                    const std::vector<EnumeratedElement<M>>& elems,
                                    ClassName cls, std::uint64_t budget);
template <SpaceModel M>
ClassVerdict class_check(const TypedPresentation<M>& p, ClassName cls,
                         std::uint64_t budget = 2000);
ClassVerdict class_check(const GroupPresentation& p, ClassName cls,
                         std::uint64_t budget = 2000);

// --- cross-identity checks ----------------------------------------------------

struct CrossCheckItem {
  std::string id;
  bool ok = false;
  std::string detail;
};

struct CrossCheckReport {
  std::vector<CrossCheckItem> items;
  bool all_ok() const {
    for (const auto& i : items)
      if (!i.ok) return false;
    return true;
  }
};

// Consistency of independently computed facts: M = Y ∧ CR; the
// element-level identity coz_closed = clcoz_open ∧ coz_regular_open;
// CR against weak-units-strong and against d-ideal behaviour of
// zero-set kernels and point kernels; pairwise agreement of the
// regularity conditions with realize_open refutation witnesses; and the
// two equivalent routes to the Y verdict.
template <SpaceModel M>
CrossCheckReport cross_check_enumerated(const TypedPresentation<M>& p,
                                        const std::vector<EnumeratedElement<M>>& elems,
                                        std::uint64_t budget);
template <SpaceModel M>
CrossCheckReport cross_check(const TypedPresentation<M>& p, std::uint64_t budget = 2000);

// One-stop analysis: enumerates once and shares the cached scan data
// across all five class checks and (optionally) the cross identities.
// Class verdicts come back in all_classes() order.
template <SpaceModel M>
struct PresentationAnalysis {
  std::vector<EnumeratedElement<M>> elements;
  std::vector<ClassVerdict> classes;
  CrossCheckReport cross;
};

template <SpaceModel M>
PresentationAnalysis<M> analyze_presentation(const TypedPresentation<M>& p,
                                             std::uint64_t budget = 2000,
                                             bool with_cross = true);

struct GroupAnalysis {
  std::vector<ClassVerdict> classes;
  CrossCheckReport cross;
};

GroupAnalysis analyze_group(const GroupPresentation& p, std::uint64_t budget = 2000,
                            bool with_cross = true);
CrossCheckReport cross_check(const GroupPresentation& p, std::uint64_t budget = 2000);

// --- builtins -----------------------------------------------------------------

// Built-in presentations: "ex_5_2_1" (family FV, generator v),
// "ex_5_2_2" (half-line piecewise-affine, generators g and hat),
// "ex_5_3_2" (family FAB, generators a and b), "ex_5_4" (family FA,
// generator a), and "finite(k)" for 1 <= k <= 31. Throws
// std::invalid_argument for unknown names.
GroupPresentation builtin(const std::string& name);

// The four structured examples; finite spaces are addressed as "finite(k)".
std::vector<std::string> builtin_names();

// --- JSON ----------------------------------------------------------------------

class PresentationError : public std::runtime_error {
 public:
  PresentationError(const std::string& message, std::string json_path)
      : std::runtime_error(message + " (at " + json_path + ")"),
        path_(std::move(json_path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Top-level schema: { "space": "alphaN"|"halfline"|"finite",
// "finite_size"?: int, "family"?: "FV"|"FA"|"FAB"|"none",
// "generators": { name: element-spec } }. Rationals are strings.
GroupPresentation presentation_from_json(const nlohmann::json& j);
GroupPresentation load_presentation_text(const std::string& text);

nlohmann::json presentation_to_json(const GroupPresentation& p);

nlohmann::json element_to_json(const alphan::AlphaNModel& m,
                               const alphan::AsymptoticSequence& e);
nlohmann::json element_to_json(const halfline::HalfLineModel& m,
                               const halfline::PwlFunction& e);
nlohmann::json element_to_json(const finite::FiniteModel& m,
                               const finite::FiniteVector& e);

alphan::AsymptoticSequence element_from_json(const alphan::AlphaNModel& m,
                                             const nlohmann::json& j,
                                             const std::string& path);
halfline::PwlFunction element_from_json(const halfline::HalfLineModel& m,
                                        const nlohmann::json& j, const std::string& path);
finite::FiniteVector element_from_json(const finite::FiniteModel& m,
                                       const nlohmann::json& j, const std::string& path);

nlohmann::json verdict_to_json(const ClassVerdict& v);
nlohmann::json cross_report_to_json(const CrossCheckReport& r);

// Explicit instantiations live in the implementation file.
extern template std::vector<EnumeratedElement<alphan::AlphaNModel>> enumerate_terms(
    const AlphaNPresentation&, std::size_t);
extern template std::vector<EnumeratedElement<halfline::HalfLineModel>> enumerate_terms(
    const HalfLinePresentation&, std::size_t);
extern template std::vector<EnumeratedElement<finite::FiniteModel>> enumerate_terms(
    const FinitePresentation&, std::size_t);
extern template ClassVerdict class_check_enumerated(
    const AlphaNPresentation&, const std::vector<EnumeratedElement<alphan::AlphaNModel>>&,
    ClassName, std::uint64_t);
extern template ClassVerdict class_check_enumerated(
    const HalfLinePresentation&,
    const std::vector<EnumeratedElement<halfline::HalfLineModel>>&, ClassName,
    std::uint64_t);
extern template ClassVerdict class_check_enumerated(
    const FinitePresentation&, const std::vector<EnumeratedElement<finite::FiniteModel>>&,
    ClassName, std::uint64_t);
extern template CrossCheckReport cross_check_enumerated(
    const AlphaNPresentation&, const std::vector<EnumeratedElement<alphan::AlphaNModel>>&,
    std::uint64_t);
extern template CrossCheckReport cross_check_enumerated(
    const HalfLinePresentation&,
    const std::vector<EnumeratedElement<halfline::HalfLineModel>>&, std::uint64_t);
extern template CrossCheckReport cross_check_enumerated(
    const FinitePresentation&, const std::vector<EnumeratedElement<finite::FiniteModel>>&,
    std::uint64_t);
extern template ClassVerdict class_check(const AlphaNPresentation&, ClassName,
                                         std::uint64_t);
extern template ClassVerdict class_check(const HalfLinePresentation&, ClassName,
                                         std::uint64_t);
extern template ClassVerdict class_check(const FinitePresentation&, ClassName,
                                         std::uint64_t);
extern template CrossCheckReport cross_check(const AlphaNPresentation&, std::uint64_t);
extern template CrossCheckReport cross_check(const HalfLinePresentation&, std::uint64_t);
extern template CrossCheckReport cross_check(const FinitePresentation&, std::uint64_t);
extern template PresentationAnalysis<alphan::AlphaNModel> analyze_presentation(
    const AlphaNPresentation&, std::uint64_t, bool);
extern template PresentationAnalysis<halfline::HalfLineModel> analyze_presentation(
    const HalfLinePresentation&, std::uint64_t, bool);
extern template PresentationAnalysis<finite::FiniteModel> analyze_presentation(
    const FinitePresentation&, std::uint64_t, bool);

}  // namespace lgroup
