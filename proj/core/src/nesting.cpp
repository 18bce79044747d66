#include "nagata/nesting.hpp"

#include <algorithm>
#include <string>

#include "nagata/errors.hpp"
#include "nagata/geometry.hpp"

namespace nagata {
namespace {

bool has_whole_space(const ColoredCover& cover, std::size_t n) {
  for (const auto& c : cover.classes())
    for (const auto& u : c)
      if (u.size() == n) return true;
  return false;
}

// Calls the provider until a candidate is scale-disjoint per class and has
// Lebesgue number >= scale.
ColoredCover obtain(const FiniteMetricSpace& space, const CoverProvider& provider,
                    Distance scale, std::size_t level, std::size_t n_colors,
                    int max_retries) {
  nlohmann::json last = nullptr;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    auto candidate = provider(scale, attempt);
    if (!candidate) {
      last = {{"attempt", attempt}, {"problem", "no cover"}};
      continue;
    }
    if (n_colors != 0 && candidate->n_colors() != n_colors) {
      throw ConstructionError(
          "provider changed the color count at level " + std::to_string(level),
          {{"stage", "provider-contract"}, {"level", level}, {"scale", scale},
           {"expected_colors", n_colors}, {"colors", candidate->n_colors()}});
    }
    for (std::size_t color = 0; color < candidate->n_colors(); ++color) {
      auto report = is_r_disjoint(space, candidate->color_class(color), scale);
      if (!report.ok()) {
        throw ConstructionError(
            "provider cover at level " + std::to_string(level) + " is not " +
                std::to_string(scale) + "-disjoint in color " + std::to_string(color),
            {{"stage", "provider-contract"}, {"level", level}, {"scale", scale},
             {"color", color}, {"witness", report.witness}});
      }
    }
    auto leb = lebesgue_at_least(space, candidate->members(), scale);
    if (leb.ok()) return std::move(*candidate);
    last = {{"attempt", attempt}, {"problem", "lebesgue shortfall"}, {"witness", leb.witness}};
  }
  throw ConstructionError("no acceptable cover at level " + std::to_string(level) +
                              " for scale " + std::to_string(scale) + " after " +
                              std::to_string(max_retries + 1) + " provider calls",
                          {{"stage", "provider"}, {"level", level}, {"scale", scale},
                           {"last", last}});
}

}  // namespace

NestedCoverSequence build_nested_sequence(const FiniteMetricSpace& space,
                                          const CoverProvider& provider,
                                          const NestingOptions& options) {
  if (options.d_1 < 1) throw InputError("d_1 must be at least 1");
  if (!options.saturate && options.num_levels < 1)
    throw InputError("num_levels must be at least 1");
  if (options.max_retries < 0) throw InputError("max_retries must be nonnegative");
  const std::size_t limit = options.saturate ? options.max_levels : options.num_levels;

  NestedCoverSequence seq;
  const std::size_t n = space.size();

  {
    ColoredCover first = obtain(space, provider, options.d_1, 1, 0, options.max_retries);
    const Distance m = first.mesh();
    seq.levels.push_back({options.d_1, first, m, options.d_1, m});
    seq.saturated = has_whole_space(seq.levels.back().cover, n);
  }

  while (!seq.saturated && seq.levels.size() < limit) {
    const auto& prev = seq.levels.back();
    const Distance d_next = std::max(2 * prev.m_k + 1, prev.d_k + 1);
    const Distance scale = d_next + 2 * prev.m_k;
    const std::size_t level = seq.levels.size() + 1;
    const std::size_t n_colors = prev.cover.n_colors();

    ColoredCover fresh =
        obtain(space, provider, scale, level, n_colors, options.max_retries);

    std::vector<Family> merged(n_colors);
    for (std::size_t color = 0; color < n_colors; ++color) {
      for (const auto& v : fresh.color_class(color)) {
        PointSet u = v;
        for (const auto& earlier : seq.levels)
          for (const auto& w : earlier.cover.color_class(color))
            if (w.intersects(v)) u = u.united(w);
        merged[color].push_back(std::move(u));
      }
    }
    ColoredCover cover = ColoredCover::make(space, std::move(merged), d_next);
    const Distance m = cover.mesh();
    seq.levels.push_back({d_next, std::move(cover), m, scale, fresh.mesh()});
    seq.saturated = has_whole_space(seq.levels.back().cover, n);
  }

  if (options.saturate && !seq.saturated) {
    throw ConstructionError("sequence did not saturate within " +
                                std::to_string(options.max_levels) + " levels",
                            {{"stage", "nesting"}, {"levels", seq.levels.size()}});
  }
  return seq;
}

CheckReport verify_nesting(const FiniteMetricSpace& space, const NestedCoverSequence& seq) {
  std::uint64_t checked = 0;
  auto fail = [&](nlohmann::json witness, std::string note) {
    return CheckReport::failed(checked, std::move(witness), std::move(note));
  };
  auto set_json = [](const PointSet& s) { return nlohmann::json(s.members()); };

  if (seq.levels.empty()) return fail({{"condition", "well-formed"}}, "sequence has no levels");
  const std::size_t n_colors = seq.levels.front().cover.n_colors();

  for (std::size_t k = 0; k < seq.levels.size(); ++k) {
    const auto& level = seq.levels[k];
    const std::size_t lk = k + 1;
    ++checked;
    if (level.cover.n_colors() != n_colors) {
      return fail({{"condition", "well-formed"}, {"level", lk}},
                  "level " + std::to_string(lk) + " has a different number of colors");
    }
    const Family members = level.cover.members();
    if (!covers(space, members)) {
      return fail({{"condition", "cover"}, {"level", lk}},
                  "level " + std::to_string(lk) + " does not cover the space");
    }
    if (level.m_k != level.cover.mesh()) {
      return fail({{"condition", "mesh-record"}, {"level", lk}, {"m_k", level.m_k},
                   {"mesh", level.cover.mesh()}},
                  "recorded m_k differs from the cover's mesh");
    }
    for (std::size_t color = 0; color < n_colors; ++color) {
      auto report = is_r_disjoint(space, level.cover.color_class(color), level.d_k);
      checked += report.checked;
      if (!report.ok()) {
        auto w = report.witness;
        w["condition"] = "1";
        w["level"] = lk;
        w["color"] = color;
        return fail(w, "condition (1) at level " + std::to_string(lk) + ": " + report.note);
      }
    }
    auto leb = lebesgue_at_least(space, members, level.d_k);
    checked += leb.checked;
    if (!leb.ok()) {
      auto w = leb.witness;
      w["condition"] = "2";
      w["level"] = lk;
      return fail(w, "condition (2) at level " + std::to_string(lk) + ": " + leb.note);
    }
  }

  for (std::size_t k = 0; k + 1 < seq.levels.size(); ++k) {
    ++checked;
    const auto& a = seq.levels[k];
    const auto& b = seq.levels[k + 1];
    if (!(b.d_k > 2 * a.m_k)) {
      return fail({{"condition", "3"}, {"level", k + 1}, {"m_k", a.m_k},
                   {"d_next", b.d_k}},
                  "condition (3): d_" + std::to_string(k + 2) + " = " +
                      std::to_string(b.d_k) + " <= 2 * m_" + std::to_string(k + 1));
    }
    if (!(b.d_k > a.d_k)) {
      return fail({{"condition", "increasing"}, {"level", k + 1}, {"d_k", a.d_k},
                   {"d_next", b.d_k}},
                  "d_k is not strictly increasing");
    }
  }

  for (std::size_t k = 0; k < seq.levels.size(); ++k) {
    for (std::size_t l = k + 1; l < seq.levels.size(); ++l) {
      for (std::size_t color = 0; color < n_colors; ++color) {
        const auto& lower = seq.levels[k].cover.color_class(color);
        const auto& upper = seq.levels[l].cover.color_class(color);
        for (std::size_t ui = 0; ui < lower.size(); ++ui) {
          for (std::size_t vi = 0; vi < upper.size(); ++vi) {
            ++checked;
            const auto& u = lower[ui];
            const auto& v = upper[vi];
            if (!u.intersects(v) || v.includes(u)) continue;
            PointIndex shared = 0, outside = 0;
            for (PointIndex p : u) {
              if (v.contains(p)) {
                shared = p;
                break;
              }
            }
            for (PointIndex p : u) {
              if (!v.contains(p)) {
                outside = p;
                break;
              }
            }
            return fail({{"condition", "4"},
                         {"levels", {k + 1, l + 1}},
                         {"color", color},
                         {"members", {ui, vi}},
                         {"sets", {set_json(u), set_json(v)}},
                         {"shared_point", shared},
                         {"escaping_point", outside}},
                        "condition (4): a level-" + std::to_string(k + 1) +
                            " member meets a level-" + std::to_string(l + 1) +
                            " member of the same color without being contained in it");
          }
        }
      }
    }
  }
  return CheckReport::passed(checked, "conditions (1)-(4), mesh records and increasing d_k");
}

CheckReport check_mesh_recurrence(const NestedCoverSequence& seq) {
  std::uint64_t checked = 0;
  for (std::size_t t = 0; t + 1 < seq.levels.size(); ++t) {
    ++checked;
    const auto& a = seq.levels[t];
    const auto& b = seq.levels[t + 1];
    if (b.m_k > 2 * a.m_k + b.provider_mesh) {
      return CheckReport::failed(
          checked,
          {{"level", t + 2}, {"m_next", b.m_k}, {"m_k", a.m_k},
           {"provider_mesh", b.provider_mesh}},
          "m_{t+1} exceeds 2 m_t + mesh(V_{t+1})");
    }
  }
  return CheckReport::passed(checked);
}

}  // namespace nagata
