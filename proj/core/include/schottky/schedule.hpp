#pragma once

#include "schottky/hyperbolic.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace schottky {

using Letter = std::uint32_t;

enum class Provenance { paper, user };

struct ScheduleEntry {
  Letter index;
  Rational center;
  Rational radius;
};

// Indexed family of boundary circles {(c_i, r_i)} whose inversions h_i
// generate the group. Values are exact; `circle<T>` lifts one generator into
// either arithmetic backend.
class GeneratorSchedule {
 public:
  GeneratorSchedule(Provenance provenance, std::vector<ScheduleEntry> entries);

  Provenance provenance() const { return provenance_; }
  const std::vector<ScheduleEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  bool contains(Letter index) const { return position_.count(index) != 0; }
  // Throws std::out_of_range for an index the schedule does not define.
  const ScheduleEntry& entry(Letter index) const;
  Letter max_index() const;

  template <Scalar T>
  Circle<T> circle(Letter index, mpfr_prec_t prec = kDefaultPrecision) const {
    const ScheduleEntry& e = entry(index);
    return Circle<T>(lift<T>(e.center, prec), lift<T>(e.radius, prec));
  }

  friend bool operator==(const GeneratorSchedule& a, const GeneratorSchedule& b);

 private:
  Provenance provenance_;
  std::vector<ScheduleEntry> entries_;
  std::map<Letter, std::size_t> position_;
};

// r_i = 2^{-2 i^2}; c_1 = 0, c_i = c_{i-1} + 2^{i^2 + 2} + 1.
Rational paper_radius(Letter i);
Rational paper_center(Letter i);
GeneratorSchedule paper_schedule(Letter count);

enum class ViolationKind {
  nonpositive_radius,
  radius_exceeds_one,
  overlapping_disks,
  centers_not_increasing,
  duplicate_index,
};

struct Violation {
  ViolationKind kind;
  Letter first;
  Letter second;  // equal to `first` for single-entry violations
  std::string message;
};

// Every violated admissibility condition with a witnessing index pair.
// Empty iff the schedule is admissible.
std::vector<Violation> validate_schedule(const GeneratorSchedule& schedule);

std::string to_string(ViolationKind kind);

class ScheduleError : public std::runtime_error {
 public:
  ScheduleError(const std::string& what, std::vector<Violation> violations = {})
      : std::runtime_error(what), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// {"model":"upper-half-plane","provenance":"paper"|"user",
//  "entries":[{"i":1,"c":"0","r":"1/4"},...]}
std::string schedule_to_json(const GeneratorSchedule& schedule);
// Throws ScheduleError on malformed input or an inadmissible schedule.
GeneratorSchedule schedule_from_json(const std::string& text);
GeneratorSchedule load_schedule(const std::string& path);

}  // namespace schottky
