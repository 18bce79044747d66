#include "nagata/nagata_space.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nagata/errors.hpp"

namespace nagata {

NagataSpace::NagataSpace(std::size_t levels_used, DistanceMatrix d,
                         std::vector<Provenance> provenance)
    : levels_used_(levels_used), d_(std::move(d)), provenance_(std::move(provenance)) {
  const std::size_t n = d_.size();
  if (provenance_.size() != n * (n - (n ? 1 : 0)) / 2) {
    throw InputError("provenance has " + std::to_string(provenance_.size()) +
                     " entries; expected one per unordered pair");
  }
  for (std::size_t s = 0; s < provenance_.size(); ++s) {
    const auto& p = provenance_[s];
    if (p.a >= p.b || p.b >= n || pair_slot(p.a, p.b) != s)
      throw InputError("provenance entry " + std::to_string(s) + " is out of pair order");
  }
}

std::size_t NagataSpace::pair_slot(PointIndex a, PointIndex b) const {
  if (a > b) std::swap(a, b);
  const std::size_t n = d_.size();
  return static_cast<std::size_t>(a) * n - static_cast<std::size_t>(a) * (a + 1) / 2 +
         (b - a - 1);
}

const Provenance& NagataSpace::provenance(PointIndex a, PointIndex b) const {
  if (a == b || a >= size() || b >= size())
    throw InputError("provenance is defined for distinct points only");
  return provenance_[pair_slot(a, b)];
}

NagataSpace build_nagata_space(const FiniteMetricSpace& base, const NestedCoverSequence& seq) {
  if (seq.levels.empty()) throw InputError("cannot build D from an empty sequence");
  const std::size_t n = base.size();
  DistanceMatrix d(n, -1);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = 0;

  std::vector<Provenance> prov;
  prov.reserve(n * (n - 1) / 2);
  for (PointIndex a = 0; a < n; ++a)
    for (PointIndex b = a + 1; b < n; ++b) prov.push_back({a, b, 0, 0, {}});
  auto slot = [n](std::size_t a, std::size_t b) { return a * n - a * (a + 1) / 2 + (b - a - 1); };

  std::size_t remaining = prov.size();
  for (std::size_t k = 0; k < seq.levels.size() && remaining > 0; ++k) {
    const auto& cover = seq.levels[k].cover;
    for (std::size_t color = 0; color < cover.n_colors(); ++color) {
      for (const auto& u : cover.color_class(color)) {
        const auto& m = u.members();
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (m[i] >= n) base.require_point(m[i]);
          for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (d(m[i], m[j]) >= 0) continue;
            d(m[i], m[j]) = d(m[j], m[i]) = static_cast<Distance>(k + 1);
            prov[slot(m[i], m[j])] = {m[i], m[j], k + 1, color, u};
            --remaining;
          }
        }
      }
    }
  }
  if (remaining > 0) {
    for (const auto& p : prov) {
      if (p.level == 0) {
        throw ConstructionError(
            "points " + std::to_string(p.a) + " and " + std::to_string(p.b) +
                " share no member at any of the " + std::to_string(seq.levels.size()) +
                " levels; the sequence needs more levels",
            {{"stage", "nagata"}, {"pair", {p.a, p.b}}});
      }
    }
  }
  return NagataSpace(seq.levels.size(), std::move(d), std::move(prov));
}

CheckReport check_provenance(const NagataSpace& ns, const NestedCoverSequence& seq) {
  std::uint64_t checked = 0;
  const std::size_t n = ns.size();
  if (ns.levels_used() != seq.levels.size()) {
    return CheckReport::failed(0, {{"levels_used", ns.levels_used()},
                                   {"sequence_levels", seq.levels.size()}},
                               "levels_used does not match the sequence");
  }
  for (PointIndex a = 0; a < n; ++a) {
    ++checked;
    if (ns(a, a) != 0)
      return CheckReport::failed(checked, {{"pair", {a, a}}, {"D", ns(a, a)}}, "nonzero diagonal");
    for (PointIndex b = a + 1; b < n; ++b) {
      ++checked;
      const Distance v = ns(a, b);
      nlohmann::json w = {{"pair", {a, b}}, {"D", v}};
      if (v != ns(b, a)) return CheckReport::failed(checked, w, "D is not symmetric");
      if (v < 1 || v > static_cast<Distance>(ns.levels_used()))
        return CheckReport::failed(checked, w, "D outside [1, levels_used]");
      const auto& p = ns.provenance(a, b);
      if (p.level != static_cast<std::size_t>(v) || !p.witness_set.contains(a) ||
          !p.witness_set.contains(b))
        return CheckReport::failed(checked, w, "provenance does not realize D");
      const auto& cls = seq.levels[p.level - 1].cover.color_class(p.color);
      if (std::find(cls.begin(), cls.end(), p.witness_set) == cls.end())
        return CheckReport::failed(checked, w, "witness set is not a member of its level and color");
      for (std::size_t k = 0; k + 1 < p.level; ++k)
        for (const auto& u : seq.levels[k].cover.members())
          if (u.contains(a) && u.contains(b)) {
            w["earlier_level"] = k + 1;
            return CheckReport::failed(checked, w, "an earlier level co-contains the pair");
          }
    }
  }
  return CheckReport::passed(checked);
}

ControlReport coarse_control(const FiniteMetricSpace& base, const NagataSpace& ns,
                             const NestedCoverSequence& seq) {
  if (ns.size() != base.size())
    throw InputError("NagataSpace and base space have different point counts");
  if (ns.levels_used() != seq.levels.size())
    throw InputError("NagataSpace was not built from this sequence (level counts differ)");
  const std::size_t n = base.size();
  const std::size_t levels = seq.levels.size();

  // Max d among pairs with D exactly k, and max D among pairs with d exactly delta.
  std::vector<Distance> max_d_at(levels + 1, 0);
  std::map<Distance, Distance> max_big_d_at;
  for (PointIndex a = 0; a < n; ++a) {
    for (PointIndex b = 0; b < n; ++b) {
      const Distance big = ns(a, b);
      const Distance small = base.dist(a, b);
      if (big < 0 || big > static_cast<Distance>(levels))
        throw InputError("NagataSpace value outside the sequence's level range");
      max_d_at[big] = std::max(max_d_at[big], small);
      auto& slot = max_big_d_at[small];
      slot = std::max(slot, big);
    }
  }

  ControlReport out;
  std::uint64_t checked = 0;
  nlohmann::json first_failure = nullptr;
  Distance running = max_d_at[0];
  for (std::size_t k = 1; k <= levels; ++k) {
    running = std::max(running, max_d_at[k]);
    const Distance bound = seq.levels[k - 1].m_k;
    ControlRow row{static_cast<Distance>(k), running, bound, running <= bound};
    ++checked;
    if (!row.ok && first_failure.is_null())
      first_failure = {{"bound", "rho_plus"}, {"k", k}, {"rho", running}, {"m_k", bound}};
    out.rho_plus.push_back(row);
  }

  Distance running_big = 0;
  for (const auto& [delta, big] : max_big_d_at) {
    running_big = std::max(running_big, big);
    ControlRow row{delta, running_big, std::nullopt, true};
    for (std::size_t r = 1; r <= levels; ++r) {
      if (seq.levels[r - 1].d_k >= delta) {
        row.bound = static_cast<Distance>(r);
        break;
      }
    }
    row.ok = !row.bound || running_big <= *row.bound;
    ++checked;
    if (!row.ok && first_failure.is_null())
      first_failure = {{"bound", "rho_minus"}, {"delta", delta}, {"rho", running_big},
                       {"r", *row.bound}};
    out.rho_minus.push_back(row);
  }

  if (first_failure.is_null()) {
    out.summary = CheckReport::passed(
        checked,
        "rho_plus(k) <= m_k for every level and rho_minus(delta) <= min{r : d_r >= delta} "
        "for every realized delta; the identity maps are mutually inverse coarse maps "
        "with C = 0");
  } else {
    out.summary = CheckReport::failed(checked, first_failure, "coarse control bound violated");
  }
  return out;
}

nlohmann::json PigeonholeTrace::to_json() const {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& s : witness) w.push_back(s ? nlohmann::json(s->members()) : nlohmann::json());
  nlohmann::json colors = nlohmann::json::array();
  for (const auto& c : color) colors.push_back(c ? nlohmann::json(*c) : nlohmann::json());
  return {{"ok", ok},          {"diagnostic", diagnostic}, {"r", r},
          {"color", colors},   {"witness_sets", w},        {"pair", {i, j}},
          {"i_in_j", i_in_j},  {"j_in_i", j_in_i},         {"conclusions", conclusions}};
}

PigeonholeTrace pigeonhole_trace(const NagataSpace& ns, const NestedCoverSequence& seq,
                                 PointIndex x, const std::vector<PointIndex>& ys) {
  PigeonholeTrace t;
  const std::size_t n_colors = seq.n_colors();
  if (ys.size() != n_colors + 1) {
    t.diagnostic = "tuple has " + std::to_string(ys.size()) + " points; expected " +
                   std::to_string(n_colors + 1);
    return t;
  }
  if (x >= ns.size() ||
      std::any_of(ys.begin(), ys.end(), [&](PointIndex y) { return y >= ns.size(); })) {
    t.diagnostic = "point index out of range";
    return t;
  }
  auto conclude = [&](PointIndex a, PointIndex b, PointIndex c, PointIndex e) {
    const bool holds = ns(a, b) <= ns(c, e);
    t.conclusions.push_back({{"lhs", {a, b}}, {"rhs", {c, e}}, {"lhs_value", ns(a, b)},
                             {"rhs_value", ns(c, e)}, {"holds", holds}});
    return holds;
  };

  for (const PointIndex y : ys) t.r.push_back(ns(y, x));
  t.color.assign(ys.size(), std::nullopt);
  t.witness.assign(ys.size(), std::nullopt);

  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      if (ys[i] == ys[j]) {
        t.i = i;
        t.j = j;
        t.diagnostic = "repeated point: D(y_i, y_j) = 0";
        t.ok = conclude(ys[i], ys[j], x, ys[i]);
        return t;
      }
    }
  }
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (ys[i] == x) {
      const std::size_t j = i == 0 ? 1 : 0;
      t.i = std::min(i, j);
      t.j = std::max(i, j);
      t.diagnostic = "y_i = x: D(y_j, y_i) = D(x, y_j)";
      t.ok = conclude(ys[j], ys[i], x, ys[j]);
      return t;
    }
  }

  for (std::size_t i = 0; i < ys.size(); ++i) {
    const auto& p = ns.provenance(x, ys[i]);
    t.color[i] = p.color;
    t.witness[i] = p.witness_set;
  }
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      if (t.color[i] != t.color[j]) continue;
      t.i = i;
      t.j = j;
      t.i_in_j = t.witness[j]->includes(*t.witness[i]);
      t.j_in_i = t.witness[i]->includes(*t.witness[j]);
      if (!t.i_in_j && !t.j_in_i) {
        t.diagnostic = "monochromatic witness sets share x but neither contains the other";
        return t;
      }
      bool holds = true;
      // V_i within V_j puts y_i, y_j in a level-r(j) member.
      if (t.i_in_j) holds &= conclude(ys[i], ys[j], x, ys[j]);
      if (t.j_in_i) holds &= conclude(ys[j], ys[i], x, ys[i]);
      t.ok = holds;
      if (!holds) t.diagnostic = "concluded inequality disagrees with D";
      return t;
    }
  }
  t.diagnostic = "no two witness sets share a color";
  return t;
}

}  // namespace nagata
