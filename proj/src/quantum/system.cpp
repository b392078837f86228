#include "nonindiv/quantum/system.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "nonindiv/error.hpp"

namespace nonindiv::quantum {

QuantumSystem::QuantumSystem(std::vector<std::string> ids, TimeInterval interval, std::size_t dim,
                             std::vector<Observable> observables,
                             std::map<std::string, std::vector<AssignmentSegment>> assignment)
    : ids_(std::move(ids)),
      interval_(interval),
      dim_(dim),
      observables_(std::move(observables)),
      assignment_(std::move(assignment)) {
  if (ids_.empty()) throw InvalidArgument("quantum system needs at least one particle");
  if (std::set<std::string>(ids_.begin(), ids_.end()).size() != ids_.size()) {
    throw InvalidArgument("duplicate particle id");
  }
  if (!(interval_.t1 > interval_.t0)) throw InvalidArgument("interval must have t1 > t0");
  if (dim_ == 0) throw InvalidArgument("dimension must be positive");
  std::set<std::string> names;
  for (const auto& o : observables_) {
    if (o.dim() != dim_) throw DimensionMismatch("observable " + o.name() + " has the wrong dimension");
    if (!names.insert(o.name()).second) throw InvalidArgument("duplicate observable name " + o.name());
  }
  if (assignment_.size() != ids_.size()) throw InvalidArgument("assignment keys must equal the particle ids");
  std::size_t arity = 0;
  bool first = true;
  for (const auto& id : ids_) {
    auto it = assignment_.find(id);
    if (it == assignment_.end() || it->second.empty()) throw InvalidArgument("no assignment for " + id);
    const auto& segs = it->second;
    if (segs.front().t_start != interval_.t0) throw InvalidArgument("assignment of " + id + " must start at t0");
    for (std::size_t k = 0; k < segs.size(); ++k) {
      if (k > 0 && !(segs[k].t_start > segs[k - 1].t_start)) {
        throw InvalidArgument("assignment segments of " + id + " must be increasing");
      }
      if (segs[k].t_start > interval_.t1) throw InvalidArgument("assignment segment starts after t1");
      if (segs[k].state.dim() != dim_) throw DimensionMismatch("state of " + id + " has the wrong dimension");
      if (first) {
        arity = segs[k].props.values.size();
        first = false;
      } else if (segs[k].props.values.size() != arity) {
        throw InvalidArgument("intrinsic property arity differs");
      }
    }
  }
}

const Observable& QuantumSystem::observable(const std::string& name) const {
  for (const auto& o : observables_) {
    if (o.name() == name) return o;
  }
  throw InvalidArgument("unknown observable " + name);
}

const AssignmentSegment& QuantumSystem::at(const std::string& id, double t) const {
  auto it = assignment_.find(id);
  if (it == assignment_.end()) throw UnknownParticle(id);
  if (!(t >= interval_.t0 && t <= interval_.t1)) throw OutOfInterval("time outside the system interval");
  const auto& segs = it->second;
  auto pos = std::upper_bound(segs.begin(), segs.end(), t,
                              [](double v, const AssignmentSegment& s) { return v < s.t_start; });
  return *std::prev(pos);
}

std::string member_label(const qset::Species& species, const IntrinsicProps& props, const StateVector& u) {
  std::string out = species.label();
  char buf[64];
  out += '|';
  for (std::size_t i = 0; i < props.values.size(); ++i) {
    std::snprintf(buf, sizeof buf, i ? ",%a" : "%a", props.values[i]);
    out += buf;
  }
  out += '|';
  for (std::size_t i = 0; i < u.dim(); ++i) {
    std::snprintf(buf, sizeof buf, i ? ",%a:%a" : "%a:%a", u[i].real(), u[i].imag());
    out += buf;
  }
  return out;
}

QuasiQuantumSystem::QuasiQuantumSystem(qset::Species species, IntrinsicProps props, StateVector state,
                                       std::uint64_t n)
    : species_(std::move(species)),
      props_(std::move(props)),
      state_(std::move(state)),
      n_(n),
      member_species_(member_label(species_, props_, state_)) {
  if (n_ == 0) throw InvalidArgument("ensemble needs n >= 1");
  ensemble_ = qset::QSetBuilder().add_micro(species_, n_).build();
  members_ = qset::QSetBuilder().add_micro(member_species_, n_).build();
}

QuasiQuantumSystem ensemble(const qset::Species& species, const IntrinsicProps& props, const StateVector& u,
                            std::uint64_t n) {
  return QuasiQuantumSystem(species, props, u, n);
}

std::vector<CollapseRecord> collapse_ensemble(const QuasiQuantumSystem& x, const Observable& o, Rng& rng) {
  if (o.dim() != x.state().dim()) throw DimensionMismatch("observable and member state dimensions differ");
  if (x.size() > kMaxCollapseMembers) throw TooLarge("ensemble too large to collapse member by member");
  std::vector<CollapseRecord> out;
  out.reserve(x.size());
  for (std::uint64_t k = 0; k < x.size(); ++k) {
    out.push_back({qset::MacroId(x.species().label() + "#" + std::to_string(k)), measure(o, x.state(), rng)});
  }
  return out;
}

qset::QSet collapsed_qset(const std::vector<CollapseRecord>& records) {
  qset::QSetBuilder b;
  for (const auto& r : records) b.add_macro(r.id);
  return std::move(b).build();
}

}  // namespace nonindiv::quantum
