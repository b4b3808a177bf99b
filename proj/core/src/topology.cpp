#include "plonka/topology.hpp"

#include <algorithm>

namespace plonka {

Section make_section(const Booleanisation& booleanisation) {
  Section section;
  section.rep.reserve(booleanisation.quotient.size());
  for (const auto& fiber : booleanisation.classes) section.rep.push_back(fiber.front());
  return section;
}

Section make_section(const Booleanisation& booleanisation, const SectionChooser& chooser) {
  Section section;
  section.rep.reserve(booleanisation.quotient.size());
  for (Elem q = 0; q < booleanisation.quotient.size(); ++q) {
    const std::uint32_t pick = chooser(q, booleanisation.classes[q]);
    if (!std::ranges::binary_search(booleanisation.classes[q], pick))
      throw BadChooser("chooser picked " + std::to_string(pick) + " outside the fiber of " +
                       std::to_string(q));
    section.rep.push_back(pick);
  }
  return section;
}

SectionCertificate verify_section(const Section& section, const Booleanisation& booleanisation,
                                  const PseudometricSpace& space,
                                  const PseudometricSpace& quotient_space,
                                  std::span<const Rat> values, const Measure& quotient_measure) {
  SectionCertificate cert;
  if (section.rep.size() != booleanisation.quotient.size()) throw BadChooser("incomplete section");

  cert.retraction = true;
  for (Elem q = 0; q < booleanisation.quotient.size(); ++q)
    if (booleanisation.pi[section.rep[q]] != q) {
      cert.retraction = false;
      break;
    }

  // continuity: the σ-preimage of each zero-class of the sum must be open in
  // the quotient topology (a union of its zero-classes)
  cert.continuous = true;
  for (const auto& cls : space.zero_classes) {
    std::vector<bool> preimage(booleanisation.quotient.size(), false);
    for (Elem q = 0; q < booleanisation.quotient.size(); ++q)
      preimage[q] = std::ranges::binary_search(cls, section.rep[q]);
    for (Elem q = 0; q < booleanisation.quotient.size() && cert.continuous; ++q)
      if (preimage[q])
        for (std::uint32_t mate : quotient_space.zero_classes[static_cast<std::size_t>(
                 quotient_space.class_of[q])])
          if (!preimage[mate]) {
            cert.continuous = false;
            break;
          }
  }

  // density: the closure of the image is the union of the zero-classes the
  // image meets
  cert.dense = std::ranges::all_of(space.zero_classes, [&section](const auto& cls) {
    return std::ranges::any_of(section.rep, [&cls](std::uint32_t rep) {
      return std::ranges::binary_search(cls, rep);
    });
  });

  cert.preserves_state = true;
  for (Elem q = 0; q < booleanisation.quotient.size(); ++q)
    if (values[section.rep[q]] != quotient_measure.value(q)) {
      cert.preserves_state = false;
      break;
    }
  return cert;
}

namespace {

using Mask = std::uint64_t;

struct MaskTopology {
  std::size_t points = 0;
  std::vector<Mask> class_masks;
  std::vector<int> class_of;
  Mask full = 0;

  Mask interior(Mask x) const {
    Mask result = 0;
    for (Mask cm : class_masks)
      if ((cm & ~x) == 0) result |= cm;
    return result;
  }
  Mask closure(Mask x) const {
    Mask result = 0;
    for (Mask cm : class_masks)
      if (cm & x) result |= cm;
    return result;
  }
  bool open(Mask x) const { return interior(x) == x; }
};

MaskTopology mask_topology(const PseudometricSpace& space) {
  MaskTopology topo;
  topo.points = space.size;
  topo.class_of = space.class_of;
  topo.full = space.size == 64 ? ~Mask{0} : (Mask{1} << space.size) - 1;
  for (const auto& cls : space.zero_classes) {
    Mask m = 0;
    for (std::uint32_t x : cls) m |= Mask{1} << x;
    topo.class_masks.push_back(m);
  }
  return topo;
}

std::vector<std::uint32_t> mask_to_set(Mask x) {
  std::vector<std::uint32_t> result;
  for (std::uint32_t i = 0; i < 64; ++i)
    if (x >> i & 1) result.push_back(i);
  return result;
}

}  // namespace

TopologyReport topology_report(const PseudometricSpace& space,
                               const PseudometricSpace& quotient_space,
                               const Booleanisation& booleanisation, bool hypotheses_met,
                               const TopologyCaps& caps) {
  if (space.size > 64 || quotient_space.size > 64)
    throw CapacityExceeded("topology report limited to carriers of at most 64 elements");
  TopologyReport report;
  report.hypotheses_met = hypotheses_met;
  const MaskTopology base = mask_topology(space);
  const MaskTopology quot = mask_topology(quotient_space);

  auto image = [&booleanisation](Mask x) {
    Mask result = 0;
    for (std::uint32_t raw = 0; raw < booleanisation.pi.size(); ++raw)
      if (x >> raw & 1) result |= Mask{1} << booleanisation.pi[raw];
    return result;
  };
  auto preimage = [&booleanisation](Mask q) {
    Mask result = 0;
    for (std::uint32_t raw = 0; raw < booleanisation.pi.size(); ++raw)
      if (q >> booleanisation.pi[raw] & 1) result |= Mask{1} << raw;
    return result;
  };

  // Saturation and open/closedness of π hold for every open iff they hold on
  // the single zero-classes (images and preimages distribute over unions).
  report.opens_saturated = true;
  report.projection_open = true;
  report.projection_closed = true;
  for (Mask cm : base.class_masks) {
    if (preimage(image(cm)) != cm) report.opens_saturated = false;
    if (!quot.open(image(cm))) report.projection_open = false;
    // closed sets are complements of opens; π(complement of U) for saturated
    // U is the complement of π(U), so closedness reduces to the same images
    if (quot.closure(image(cm)) != image(cm)) report.projection_closed = false;
  }

  // interior preservation
  const bool fibers_singleton = std::ranges::all_of(
      booleanisation.classes, [](const auto& fiber) { return fiber.size() == 1; });
  auto violates = [&](Mask x) {
    return image(base.interior(x)) != quot.interior(image(x));
  };
  report.interior.preserving = true;
  if (space.size <= static_cast<std::size_t>(caps.interior_bruteforce_bits)) {
    report.interior.brute_forced = true;
    const Mask limit = Mask{1} << space.size;
    for (Mask x = 0; x < limit; ++x)
      if (violates(x)) {
        report.interior.preserving = false;
        report.interior.witness = mask_to_set(x);
        break;
      }
  } else {
    // documented witness family: all unions of zero-classes, then every
    // singleton-deleted set B∖{b}
    report.interior.brute_forced = false;
    report.capped = true;
    report.cap_note = "interior preservation decided over the witness family, not all subsets";
    const std::size_t c = base.class_masks.size();
    if (c <= 20) {
      for (Mask pick = 0; pick < (Mask{1} << c) && report.interior.preserving; ++pick) {
        Mask x = 0;
        for (std::size_t i = 0; i < c; ++i)
          if (pick >> i & 1) x |= base.class_masks[i];
        if (violates(x)) {
          report.interior.preserving = false;
          report.interior.witness = mask_to_set(x);
        }
      }
    }
    for (std::uint32_t b = 0; b < space.size && report.interior.preserving; ++b) {
      const Mask x = base.full & ~(Mask{1} << b);
      if (violates(x)) {
        report.interior.preserving = false;
        report.interior.witness = mask_to_set(x);
      }
    }
  }
  report.interior.matches_singleton_criterion =
      report.interior.preserving == fibers_singleton;
  if (hypotheses_met && !report.interior.matches_singleton_criterion)
    throw InternalInconsistency("interior-preservation criterion fails under the hypotheses");

  // Reg(B) vs Reg(A_∞).  In a partition topology every open is clopen, hence
  // regular; Reg is the powerset algebra over the zero-classes.  π must send
  // each zero-class onto exactly one quotient class, bijectively.
  std::vector<int> class_map(base.class_masks.size(), -1);
  bool bijective = base.class_masks.size() == quot.class_masks.size();
  for (std::size_t i = 0; i < base.class_masks.size() && bijective; ++i) {
    const Mask img = image(base.class_masks[i]);
    for (std::size_t j = 0; j < quot.class_masks.size(); ++j)
      if (img == quot.class_masks[j]) {
        class_map[i] = static_cast<int>(j);
        break;
      }
    if (class_map[i] == -1) bijective = false;
  }
  if (bijective) {
    std::vector<int> sorted = class_map;
    std::ranges::sort(sorted);
    bijective = std::ranges::adjacent_find(sorted) == sorted.end();
  }
  report.reg.isomorphic = bijective;
  if (bijective) {
    auto reg_image = [&](Mask open_b) {  // opens as class masks
      Mask result = 0;
      for (std::size_t i = 0; i < class_map.size(); ++i)
        if (open_b >> i & 1) result |= Mask{1} << class_map[i];
      return result;
    };
    const std::size_t c = base.class_masks.size();
    if (c <= static_cast<std::size_t>(caps.reg_full_table_classes)) {
      report.reg.full_table_checked = true;
      const Mask count = Mask{1} << c;
      report.reg.opens_checked = count;
      const Mask full_b = count - 1;
      const Mask full_q = (Mask{1} << quot.class_masks.size()) - 1;
      bool tables_match = reg_image(0) == 0 && reg_image(full_b) == full_q;
      for (Mask u = 0; u < count && tables_match; ++u) {
        if (reg_image(full_b & ~u) != (full_q & ~reg_image(u))) tables_match = false;
        for (Mask v = 0; v < count && tables_match; ++v) {
          if (reg_image(u & v) != (reg_image(u) & reg_image(v))) tables_match = false;
          if (reg_image(u | v) != (reg_image(u) | reg_image(v))) tables_match = false;
        }
      }
      report.reg.isomorphic = tables_match;
    } else {
      report.capped = true;
      report.cap_note += std::string(report.cap_note.empty() ? "" : "; ") +
                         "Reg isomorphism checked on generators only";
      report.reg.opens_checked = base.class_masks.size();
    }
  }
  return report;
}

bool interior_violated_by(const PseudometricSpace& space,
                          const PseudometricSpace& quotient_space,
                          const Booleanisation& booleanisation,
                          std::span<const std::uint32_t> subset) {
  if (space.size > 64 || quotient_space.size > 64)
    throw CapacityExceeded("witness check limited to carriers of at most 64 elements");
  const MaskTopology base = mask_topology(space);
  const MaskTopology quot = mask_topology(quotient_space);
  Mask x = 0;
  for (std::uint32_t member : subset) x |= Mask{1} << member;
  Mask image_interior = 0, image = 0;
  const Mask interior = base.interior(x);
  for (std::uint32_t raw = 0; raw < booleanisation.pi.size(); ++raw) {
    if (interior >> raw & 1) image_interior |= Mask{1} << booleanisation.pi[raw];
    if (x >> raw & 1) image |= Mask{1} << booleanisation.pi[raw];
  }
  return image_interior != quot.interior(image);
}

bool is_class_constant(const PseudometricSpace& space, std::span<const Rat> values) {
  if (values.size() != space.size) return false;
  for (const auto& cls : space.zero_classes)
    for (std::uint32_t x : cls)
      if (values[x] != values[cls.front()]) return false;
  return true;
}

UniquenessCertificate state_uniqueness_check(const DirectSystem& system, const PlonkaSum& sum,
                                             const Booleanisation& booleanisation,
                                             const State& state) {
  if (!is_injective_system(system) || !is_faithful(system, state))
    throw HypothesesUnmet("uniqueness requires an injective system and a faithful state");
  const PseudometricSpace space = pseudometric(system, sum, state);
  const Section section = make_section(booleanisation);
  const Measure mu = quotient_measure(system, state);

  // a continuous t with t∘σ = Φ(s) is pinned on one representative per
  // zero-class (classes = fibers under the hypotheses), so at most one exists
  std::vector<Rat> candidate(space.size);
  for (Elem q = 0; q < booleanisation.quotient.size(); ++q) {
    const Rat pinned = mu.value(q);
    for (std::uint32_t member :
         space.zero_classes[static_cast<std::size_t>(space.class_of[section.rep[q]])])
      candidate[member] = pinned;
  }
  UniquenessCertificate cert;
  cert.exists_unique = is_class_constant(space, candidate);
  const std::vector<Rat> values = state_table(system, sum, state);
  cert.equals_state = candidate == values;
  if (!cert.exists_unique || !cert.equals_state)
    throw InternalInconsistency("continuous extension is not the state itself");
  return cert;
}

}  // namespace plonka
