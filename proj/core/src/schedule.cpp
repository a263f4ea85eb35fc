#include "schottky/schedule.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace schottky {

GeneratorSchedule::GeneratorSchedule(Provenance provenance, std::vector<ScheduleEntry> entries)
    : provenance_(provenance), entries_(std::move(entries)) {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    // Duplicates are kept in `entries_` so validation can report them.
    position_.emplace(entries_[k].index, k);
  }
}

const ScheduleEntry& GeneratorSchedule::entry(Letter index) const {
  const auto it = position_.find(index);
  if (it == position_.end()) {
    throw std::out_of_range("schedule has no generator with index " + std::to_string(index));
  }
  return entries_[it->second];
}

Letter GeneratorSchedule::max_index() const {
  if (position_.empty()) throw std::out_of_range("empty schedule");
  return position_.rbegin()->first;
}

bool operator==(const GeneratorSchedule& a, const GeneratorSchedule& b) {
  if (a.provenance_ != b.provenance_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    const auto& x = a.entries_[k];
    const auto& y = b.entries_[k];
    if (x.index != y.index || x.center != y.center || x.radius != y.radius) return false;
  }
  return true;
}

Rational paper_radius(Letter i) {
  if (i == 0) throw std::invalid_argument("generator indices start at 1");
  return pow2(-2L * static_cast<long>(i) * static_cast<long>(i));
}

Rational paper_center(Letter i) {
  if (i == 0) throw std::invalid_argument("generator indices start at 1");
  Rational c = 0;
  for (Letter j = 2; j <= i; ++j) {
    c += pow2(static_cast<long>(j) * static_cast<long>(j) + 2) + 1;
  }
  return c;
}

GeneratorSchedule paper_schedule(Letter count) {
  if (count == 0) throw std::invalid_argument("the closed-form schedule needs at least one generator");
  std::vector<ScheduleEntry> entries;
  entries.reserve(count);
  Rational c = 0;
  for (Letter i = 1; i <= count; ++i) {
    if (i > 1) c += pow2(static_cast<long>(i) * static_cast<long>(i) + 2) + 1;
    entries.push_back({i, c, paper_radius(i)});
  }
  return GeneratorSchedule(Provenance::paper, std::move(entries));
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::nonpositive_radius: return "nonpositive_radius";
    case ViolationKind::radius_exceeds_one: return "radius_exceeds_one";
    case ViolationKind::overlapping_disks: return "overlapping_disks";
    case ViolationKind::centers_not_increasing: return "centers_not_increasing";
    case ViolationKind::duplicate_index: return "duplicate_index";
  }
  return "unknown";
}

std::vector<Violation> validate_schedule(const GeneratorSchedule& schedule) {
  std::vector<Violation> out;
  const auto& e = schedule.entries();
  for (const auto& entry : e) {
    if (entry.index == 0) {
      out.push_back({ViolationKind::duplicate_index, 0, 0, "generator index 0 is not allowed"});
    }
    if (entry.radius <= 0) {
      out.push_back({ViolationKind::nonpositive_radius, entry.index, entry.index,
                     "radius of generator " + std::to_string(entry.index) + " is not positive"});
    } else if (entry.radius > 1) {
      out.push_back({ViolationKind::radius_exceeds_one, entry.index, entry.index,
                     "radius of generator " + std::to_string(entry.index) + " exceeds 1"});
    }
  }

  std::vector<const ScheduleEntry*> by_index;
  for (const auto& entry : e) by_index.push_back(&entry);
  std::stable_sort(by_index.begin(), by_index.end(),
                   [](const ScheduleEntry* a, const ScheduleEntry* b) { return a->index < b->index; });
  for (std::size_t k = 1; k < by_index.size(); ++k) {
    const auto& prev = *by_index[k - 1];
    const auto& cur = *by_index[k];
    if (prev.index == cur.index) {
      out.push_back({ViolationKind::duplicate_index, prev.index, cur.index,
                     "index " + std::to_string(cur.index) + " appears twice"});
    } else if (cur.center <= prev.center) {
      out.push_back({ViolationKind::centers_not_increasing, prev.index, cur.index,
                     "centre of " + std::to_string(cur.index) + " does not exceed centre of " +
                         std::to_string(prev.index)});
    }
  }

  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = a + 1; b < e.size(); ++b) {
      if (e[a].radius <= 0 || e[b].radius <= 0) continue;
      const Rational gap = abs(e[a].center - e[b].center);
      if (gap <= e[a].radius + e[b].radius) {
        out.push_back({ViolationKind::overlapping_disks, e[a].index, e[b].index,
                       "disks " + std::to_string(e[a].index) + " and " + std::to_string(e[b].index) +
                           " intersect"});
      }
    }
  }
  return out;
}

std::string schedule_to_json(const GeneratorSchedule& schedule) {
  nlohmann::ordered_json doc;
  doc["model"] = "upper-half-plane";
  doc["provenance"] = schedule.provenance() == Provenance::paper ? "paper" : "user";
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : schedule.entries()) {
    nlohmann::ordered_json item;
    item["i"] = e.index;
    item["c"] = to_string(e.center);
    item["r"] = to_string(e.radius);
    entries.push_back(std::move(item));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

namespace {

Rational json_rational(const nlohmann::json& v, const char* field) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(mpz_class(v.dump(), 10));
  throw ScheduleError(std::string("field '") + field + "' must be a string or an integer");
}

}  // namespace

GeneratorSchedule schedule_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ScheduleError(std::string("schedule is not valid JSON: ") + ex.what());
  }
  try {
    if (doc.value("model", std::string("upper-half-plane")) != "upper-half-plane") {
      throw ScheduleError("unsupported model '" + doc["model"].get<std::string>() + "'");
    }
    const std::string prov = doc.value("provenance", std::string("user"));
    if (prov != "paper" && prov != "user") throw ScheduleError("unknown provenance '" + prov + "'");
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
      throw ScheduleError("schedule needs an 'entries' array");
    }
    std::vector<ScheduleEntry> entries;
    for (const auto& item : doc["entries"]) {
      const auto index = item.at("i").get<std::int64_t>();
      if (index < 1 || index > std::int64_t{UINT32_MAX}) throw ScheduleError("generator index out of range");
      entries.push_back({static_cast<Letter>(index), json_rational(item.at("c"), "c"),
                         json_rational(item.at("r"), "r")});
    }
    if (entries.empty()) throw ScheduleError("schedule has no entries");
    GeneratorSchedule schedule(prov == "paper" ? Provenance::paper : Provenance::user, std::move(entries));
    if (schedule.provenance() == Provenance::paper) {
      for (const auto& e : schedule.entries()) {
        if (e.center != paper_center(e.index) || e.radius != paper_radius(e.index)) {
          throw ScheduleError("entry " + std::to_string(e.index) +
                              " is tagged paper but differs from the closed-form schedule");
        }
      }
    }
    auto violations = validate_schedule(schedule);
    if (!violations.empty()) {
      const std::string what = "inadmissible schedule: " + violations.front().message;
      throw ScheduleError(what, std::move(violations));
    }
    return schedule;
  } catch (const nlohmann::json::exception& ex) {
    throw ScheduleError(std::string("malformed schedule: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ScheduleError(std::string("malformed schedule value: ") + ex.what());
  }
}

GeneratorSchedule load_schedule(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScheduleError("cannot open schedule file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return schedule_from_json(buffer.str());
}

}  // namespace schottky
