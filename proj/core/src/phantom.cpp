#include "cavlab/phantom.hpp"

#include <algorithm>
#include <cmath>

#include "cavlab/errors.hpp"
#include "cavlab/rng.hpp"

namespace cavlab::synth {

namespace {

constexpr std::uint64_t kGeometryStream = 0x67656f6d;  // "geom"
constexpr std::uint64_t kNoiseStream = 0x6e6f6973;     // "nois"

bool in_ellipse(double x, double y, double cx, double cy, double a, double b) {
  const double dx = (x - cx) / a;
  const double dy = (y - cy) / b;
  return dx * dx + dy * dy <= 1.0;
}

}  // namespace

std::string_view concept_name(ConceptId c) {
  switch (c) {
    case ConceptId::Cardio: return "CARDIO";
    case ConceptId::Nodule: return "NODULE";
    case ConceptId::Effusion: return "EFFUSION";
  }
  return "UNKNOWN";
}

std::optional<ConceptId> concept_from_name(std::string_view name) {
  for (ConceptId c : kAllConcepts)
    if (concept_name(c) == name) return c;
  return std::nullopt;
}

std::string_view style_name(StyleId s) { return s == StyleId::A ? "A" : "B"; }

std::optional<StyleId> style_from_name(std::string_view name) {
  if (name == "A") return StyleId::A;
  if (name == "B") return StyleId::B;
  return std::nullopt;
}

StyleParams style_params(StyleId s) {
  // Styles differ in noise, background offset and contrast; mild enough that
  // one autoencoder reconstructs both, distinct enough to separate their
  // intensity histograms.
  if (s == StyleId::A) return {0.02f, 0.00f, 1.0f};
  return {0.05f, 0.05f, 0.9f};
}

const PhantomLayout& phantom_layout() {
  static const PhantomLayout layout{};
  return layout;
}

SampleGeometry draw_geometry(const std::vector<ConceptId>& present, std::uint64_t seed) {
  const PhantomLayout& L = phantom_layout();
  Rng rng(Rng::derive(seed, kGeometryStream));
  SampleGeometry g;
  const auto has = [&](ConceptId c) {
    return std::find(present.begin(), present.end(), c) != present.end();
  };
  // Draw order is fixed (CARDIO, NODULE, EFFUSION) so geometry depends only
  // on (present set, seed), never on style.
  if (has(ConceptId::Cardio)) g.heart_scale = rng.uniform(1.4, 1.8);
  if (has(ConceptId::Nodule)) {
    g.nodule_side = static_cast<int>(rng.index(2));
    g.nodule_r = rng.uniform(2.0, 4.0);
    // Center uniform in the lung ellipse shrunk by r, so the disk stays
    // inside the lung field. Rejection sampling over the bounding box.
    const double cx = L.lung_cx[g.nodule_side];
    const double a = L.lung_a - g.nodule_r;
    const double b = L.lung_b - g.nodule_r;
    for (;;) {
      const double x = rng.uniform(cx - a, cx + a);
      const double y = rng.uniform(L.lung_cy - b, L.lung_cy + b);
      if (in_ellipse(x, y, cx, L.lung_cy, a, b)) {
        g.nodule_cx = x;
        g.nodule_cy = y;
        break;
      }
    }
  }
  if (has(ConceptId::Effusion)) {
    g.effusion_side = static_cast<int>(rng.index(2));
    g.effusion_height = 6 + static_cast<int>(rng.index(7));  // 6..12
  }
  return g;
}

Sample generate_sample(StyleId style, const std::vector<ConceptId>& concepts,
                       std::uint64_t seed) {
  const PhantomLayout& L = phantom_layout();

  Sample s;
  s.style = style;
  s.seed = seed;
  s.labels = concepts;
  std::sort(s.labels.begin(), s.labels.end());
  s.labels.erase(std::unique(s.labels.begin(), s.labels.end()), s.labels.end());

  const SampleGeometry g = draw_geometry(s.labels, seed);
  const auto has = [&](ConceptId c) {
    return std::find(s.labels.begin(), s.labels.end(), c) != s.labels.end();
  };

  // Base anatomy, then concepts, in a fixed paint order.
  Image base(L.width, L.height);
  const double heart_a = L.heart_a * (has(ConceptId::Cardio) ? g.heart_scale : 1.0);
  for (int y = 0; y < L.height; ++y) {
    for (int x = 0; x < L.width; ++x) {
      float v = L.background;
      if (in_ellipse(x, y, L.torso_cx, L.torso_cy, L.torso_a, L.torso_b))
        v = L.torso_intensity;
      for (int side = 0; side < 2; ++side)
        if (in_ellipse(x, y, L.lung_cx[side], L.lung_cy, L.lung_a, L.lung_b))
          v = L.lung_intensity;
      if (in_ellipse(x, y, L.heart_cx, L.heart_cy, heart_a, L.heart_b))
        v = L.heart_intensity;
      base.at(x, y) = v;
    }
  }

  if (has(ConceptId::Cardio)) {
    Mask m(L.width, L.height);
    for (int y = 0; y < L.height; ++y)
      for (int x = 0; x < L.width; ++x)
        if (in_ellipse(x, y, L.heart_cx, L.heart_cy, heart_a, L.heart_b) &&
            !in_ellipse(x, y, L.heart_cx, L.heart_cy, L.heart_a, L.heart_b))
          m.at(x, y) = 1;
    s.masks[ConceptId::Cardio] = std::move(m);
  }

  if (has(ConceptId::Effusion)) {
    // Horizontal band at the lung base, clipped to the lung field so the
    // mask stays inside the torso.
    Mask m(L.width, L.height);
    const double cx = L.lung_cx[g.effusion_side];
    const int base_y = static_cast<int>(L.lung_cy + L.lung_b);
    const int top_y = base_y - g.effusion_height + 1;  // band covers `height` rows
    for (int y = std::max(0, top_y); y <= std::min(L.height - 1, base_y); ++y)
      for (int x = 0; x < L.width; ++x)
        if (in_ellipse(x, y, cx, L.lung_cy, L.lung_a, L.lung_b)) {
          m.at(x, y) = 1;
          base.at(x, y) += L.effusion_delta;
        }
    s.masks[ConceptId::Effusion] = std::move(m);
  }

  if (has(ConceptId::Nodule)) {
    Mask m(L.width, L.height);
    const double r2 = g.nodule_r * g.nodule_r;
    for (int y = 0; y < L.height; ++y)
      for (int x = 0; x < L.width; ++x) {
        const double dx = x - g.nodule_cx, dy = y - g.nodule_cy;
        if (dx * dx + dy * dy <= r2) {
          m.at(x, y) = 1;
          base.at(x, y) = L.nodule_intensity;
        }
      }
    if (m.empty_mask())
      throw ContractViolation("nodule rasterized to an empty mask");
    s.masks[ConceptId::Nodule] = std::move(m);
  }

  // Style pass: offset + contrast on the clean phantom, then seeded noise.
  const StyleParams p = style_params(style);
  Rng noise(Rng::derive(seed, kNoiseStream));
  s.image = Image(L.width, L.height);
  for (std::size_t i = 0; i < base.pixels.size(); ++i) {
    const float n = static_cast<float>(noise.normal());
    float v = p.offset + p.contrast * base.pixels[i] + p.noise_sigma * n;
    s.image.pixels[i] = std::clamp(v, 0.0f, 1.0f);
  }
  return s;
}

}  // namespace cavlab::synth
