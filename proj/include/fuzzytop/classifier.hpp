#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "operators.hpp"

namespace fuzzytop {

/// Every membership class the classifier reports, closed/open forms paired.
/// The *_closed/*_open forms are complement-dual throughout: A belongs to an
/// open form exactly when its complement belongs to the closed form.
///
/// Beyond the operator classes (s, p, alpha, sp) the catalogue covers the
/// kernel classes, each defined by "OP(A) <= U for every guard superset U of
/// A" for a closure operator OP and a guard family:
///   g       (cl,   open)        sg      (scl,  semi-open)
///   alphag  (acl,  open)        galpha  (acl,  alpha-open)
///   spg     (spcl, sp-open)     pg      (pcl,  p-open)
///   gs      (scl,  open)        gp      (pcl,  open)
///   gsp     (spcl, open)        gstars  (scl,  gs-open)
///   weakly  (cl,   semi-open)
enum class SetClass : std::uint8_t {
  closed, open,
  s_closed, s_open,
  p_closed, p_open,
  alpha_closed, alpha_open,
  sp_closed, sp_open,
  g_closed, g_open,
  sg_closed, sg_open,
  alphag_closed, alphag_open,
  galpha_closed, galpha_open,
  spg_closed, spg_open,
  pg_closed, pg_open,
  gs_closed, gs_open,
  gp_closed, gp_open,
  gsp_closed, gsp_open,
  gstars_closed, gstars_open,
  weakly_closed, weakly_open,
};

inline constexpr std::size_t set_class_count = 32;

inline const std::array<SetClass, set_class_count>& all_set_classes() {
  static const std::array<SetClass, set_class_count> classes = [] {
    std::array<SetClass, set_class_count> out{};
    for (std::size_t i = 0; i < set_class_count; ++i)
      out[i] = static_cast<SetClass>(i);
    return out;
  }();
  return classes;
}

inline std::string_view class_name(SetClass c) {
  static constexpr std::array<std::string_view, set_class_count> names = {
      "closed", "open",
      "s_closed", "s_open",
      "p_closed", "p_open",
      "alpha_closed", "alpha_open",
      "sp_closed", "sp_open",
      "g_closed", "g_open",
      "sg_closed", "sg_open",
      "alphag_closed", "alphag_open",
      "galpha_closed", "galpha_open",
      "spg_closed", "spg_open",
      "pg_closed", "pg_open",
      "gs_closed", "gs_open",
      "gp_closed", "gp_open",
      "gsp_closed", "gsp_open",
      "gstars_closed", "gstars_open",
      "weakly_closed", "weakly_open",
  };
  return names[static_cast<std::size_t>(c)];
}

inline std::optional<SetClass> parse_class_name(std::string_view name) {
  for (const SetClass c : all_set_classes())
    if (class_name(c) == name) return c;
  return std::nullopt;
}

/// The complement-dual class: closed form <-> open form.
inline SetClass dual_class(SetClass c) {
  const auto i = static_cast<std::size_t>(c);
  return static_cast<SetClass>(i % 2 == 0 ? i + 1 : i - 1);
}

/// Classification of one fuzzy set against the whole class catalogue.
struct ClassReport {
  std::string set_name;
  FuzzySet set;
  std::array<bool, set_class_count> verdicts{};

  bool operator[](SetClass c) const {
    return verdicts[static_cast<std::size_t>(c)];
  }
};

/// Per-topology analysis engine. On construction it enumerates every
/// grid-valued set once and tabulates interior, closure, the four operator
/// closures, the guard families, the semi-kernel and the weak closure; class
/// queries are then table lookups. Intended for the small universes this
/// library works with (|grid|^|carrier| bounded by the cap).
class Classifier {
 public:
  explicit Classifier(FuzzyTopology topology,
                      std::size_t cap = default_enumeration_cap())
      : t_(std::move(topology)),
        universe_(enumerate_grid_sets(t_.carrier(), t_.grid(), cap)) {
    build_tables();
  }

  const FuzzyTopology& topology() const { return t_; }

  /// Every grid-valued set, in canonical order.
  const std::vector<FuzzySet>& universe() const { return universe_; }
  std::size_t universe_size() const { return universe_.size(); }

  /// Position of a grid-valued set in the universe.
  std::size_t index_of(const FuzzySet& a) const {
    return grid_set_index(a, t_.grid());
  }

  std::size_t complement_index(std::size_t i) const { return compl_[i]; }

  const FuzzySet& interior_of(std::size_t i) const { return universe_[int_[i]]; }
  const FuzzySet& closure_of(std::size_t i) const { return universe_[cl_[i]]; }
  const FuzzySet& kind_closure_of(std::size_t i, OperatorKind k) const {
    return universe_[kindcl_[kind_index(k)][i]];
  }
  const FuzzySet& semi_kernel_of(std::size_t i) const {
    return universe_[sker_[i]];
  }
  const FuzzySet& weak_closure_of(std::size_t i) const {
    return universe_[wcl_[i]];
  }
  const FuzzySet& weak_interior_of(std::size_t i) const {
    return universe_[wint_[i]];
  }

  bool is(SetClass c, std::size_t i) const {
    return verdicts_[i][static_cast<std::size_t>(c)];
  }
  bool is(SetClass c, const FuzzySet& a) const { return is(c, index_of(a)); }

  ClassReport classify(const FuzzySet& a, std::string name = {}) const {
    ClassReport report{std::move(name), a, verdicts_[index_of(a)]};
    return report;
  }

 private:
  static std::size_t kind_index(OperatorKind k) {
    return static_cast<std::size_t>(k);
  }

  bool leq_sets(std::size_t i, std::size_t j) const {
    return leq(universe_[i], universe_[j]);
  }

  std::size_t meet_of_supersets(std::size_t i,
                                const std::vector<bool>& family) const {
    FuzzySet acc = FuzzySet::one(t_.carrier());
    for (std::size_t j = 0; j < universe_.size(); ++j)
      if (family[j] && leq_sets(i, j)) acc = meet(acc, universe_[j]);
    return grid_set_index(acc, t_.grid());
  }

  std::size_t join_of_subsets(std::size_t i,
                              const std::vector<bool>& family) const {
    FuzzySet acc = FuzzySet::zero(t_.carrier());
    for (std::size_t j = 0; j < universe_.size(); ++j)
      if (family[j] && leq_sets(j, i)) acc = join(acc, universe_[j]);
    return grid_set_index(acc, t_.grid());
  }

  /// Kernel-class table: i is in the class when opcl[i] <= U for every guard
  /// superset U of i.
  std::vector<bool> kernel_class(const std::vector<std::size_t>& opcl,
                                 const std::vector<bool>& guard) const {
    const std::size_t n = universe_.size();
    std::vector<bool> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      bool ok = true;
      for (std::size_t j = 0; ok && j < n; ++j)
        if (guard[j] && leq_sets(i, j) && !leq_sets(opcl[i], j)) ok = false;
      out[i] = ok;
    }
    return out;
  }

  static std::vector<bool> complement_flags(const std::vector<bool>& flags,
                                            const std::vector<std::size_t>& compl_idx) {
    std::vector<bool> out(flags.size());
    for (std::size_t i = 0; i < flags.size(); ++i) out[i] = flags[compl_idx[i]];
    return out;
  }

  void build_tables() {
    const std::size_t n = universe_.size();
    const Grid& grid = t_.grid();

    compl_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      compl_[i] = grid_set_index(complement(universe_[i]), grid);

    open_.resize(n);
    closed_.resize(n);
    int_.resize(n);
    cl_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      open_[i] = t_.is_open(universe_[i]);
      closed_[i] = t_.is_closed(universe_[i]);
      int_[i] = grid_set_index(interior(t_, universe_[i]), grid);
      cl_[i] = grid_set_index(closure(t_, universe_[i]), grid);
    }

    for (auto& flags : kindclosed_) flags.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      kindclosed_[kind_index(OperatorKind::s)][i] = leq_sets(int_[cl_[i]], i);
      kindclosed_[kind_index(OperatorKind::p)][i] = leq_sets(cl_[int_[i]], i);
      kindclosed_[kind_index(OperatorKind::alpha)][i] =
          leq_sets(cl_[int_[cl_[i]]], i);
      kindclosed_[kind_index(OperatorKind::sp)][i] =
          leq_sets(int_[cl_[int_[i]]], i);
    }
    for (const OperatorKind k : all_operator_kinds)
      kindopen_[kind_index(k)] =
          complement_flags(kindclosed_[kind_index(k)], compl_);

    for (const OperatorKind k : all_operator_kinds) {
      auto& table = kindcl_[kind_index(k)];
      table.resize(n);
      for (std::size_t i = 0; i < n; ++i)
        table[i] = meet_of_supersets(i, kindclosed_[kind_index(k)]);
    }

    sker_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      sker_[i] = meet_of_supersets(i, kindopen_[kind_index(OperatorKind::s)]);

    weakly_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      weakly_[i] = leq_sets(cl_[i], sker_[i]);
    weaklyopen_ = complement_flags(weakly_, compl_);

    g_ = kernel_class(cl_, open_);
    const auto& scl = kindcl_[kind_index(OperatorKind::s)];
    const auto& pcl = kindcl_[kind_index(OperatorKind::p)];
    const auto& acl = kindcl_[kind_index(OperatorKind::alpha)];
    const auto& spcl = kindcl_[kind_index(OperatorKind::sp)];
    sg_ = kernel_class(scl, kindopen_[kind_index(OperatorKind::s)]);
    alphag_ = kernel_class(acl, open_);
    galpha_ = kernel_class(acl, kindopen_[kind_index(OperatorKind::alpha)]);
    spg_ = kernel_class(spcl, kindopen_[kind_index(OperatorKind::sp)]);
    pg_ = kernel_class(pcl, kindopen_[kind_index(OperatorKind::p)]);
    gs_ = kernel_class(scl, open_);
    gp_ = kernel_class(pcl, open_);
    gsp_ = kernel_class(spcl, open_);
    gsopen_ = complement_flags(gs_, compl_);
    gstars_ = kernel_class(scl, gsopen_);

    wcl_.resize(n);
    wint_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      wcl_[i] = meet_of_supersets(i, weakly_);
      wint_[i] = join_of_subsets(i, weaklyopen_);
    }

    verdicts_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto& v = verdicts_[i];
      const std::size_t ic = compl_[i];
      const auto set = [&v](SetClass c, bool value) {
        v[static_cast<std::size_t>(c)] = value;
      };
      set(SetClass::closed, closed_[i]);
      set(SetClass::open, open_[i]);
      for (const OperatorKind k : all_operator_kinds) {
        const std::size_t ki = kind_index(k);
        const SetClass closed_form =
            k == OperatorKind::s       ? SetClass::s_closed
            : k == OperatorKind::p     ? SetClass::p_closed
            : k == OperatorKind::alpha ? SetClass::alpha_closed
                                       : SetClass::sp_closed;
        set(closed_form, kindclosed_[ki][i]);
        set(dual_class(closed_form), kindopen_[ki][i]);
      }
      set(SetClass::g_closed, g_[i]);
      set(SetClass::g_open, g_[ic]);
      set(SetClass::sg_closed, sg_[i]);
      set(SetClass::sg_open, sg_[ic]);
      set(SetClass::alphag_closed, alphag_[i]);
      set(SetClass::alphag_open, alphag_[ic]);
      set(SetClass::galpha_closed, galpha_[i]);
      set(SetClass::galpha_open, galpha_[ic]);
      set(SetClass::spg_closed, spg_[i]);
      set(SetClass::spg_open, spg_[ic]);
      set(SetClass::pg_closed, pg_[i]);
      set(SetClass::pg_open, pg_[ic]);
      set(SetClass::gs_closed, gs_[i]);
      set(SetClass::gs_open, gs_[ic]);
      set(SetClass::gp_closed, gp_[i]);
      set(SetClass::gp_open, gp_[ic]);
      set(SetClass::gsp_closed, gsp_[i]);
      set(SetClass::gsp_open, gsp_[ic]);
      set(SetClass::gstars_closed, gstars_[i]);
      set(SetClass::gstars_open, gstars_[ic]);
      set(SetClass::weakly_closed, weakly_[i]);
      set(SetClass::weakly_open, weakly_[ic]);
    }
  }

  FuzzyTopology t_;
  std::vector<FuzzySet> universe_;
  std::vector<std::size_t> compl_, int_, cl_, sker_, wcl_, wint_;
  std::array<std::vector<std::size_t>, 4> kindcl_;
  std::vector<bool> open_, closed_, weakly_, weaklyopen_, g_, sg_, alphag_,
      galpha_, spg_, pg_, gs_, gp_, gsp_, gsopen_, gstars_;
  std::array<std::vector<bool>, 4> kindclosed_, kindopen_;
  std::vector<std::array<bool, set_class_count>> verdicts_;
};

/// One-shot membership query. Builds a transient Classifier, so prefer the
/// Classifier itself when asking several questions about one space.
inline bool is_in_class(const FuzzyTopology& t, const FuzzySet& a, SetClass c,
                        std::size_t cap = default_enumeration_cap()) {
  return Classifier(t, cap).is(c, a);
}

/// Interior characterization of weak openness: A is weakly open exactly when
/// every grid-valued semi-closed subset of A lies below interior(A). Used as
/// a cross-check against the complement route the classifier tabulates.
inline bool weakly_open_by_interior(const Classifier& clf, std::size_t i) {
  const auto& u = clf.universe();
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (!clf.is(SetClass::s_closed, j)) continue;
    if (leq(u[j], u[i]) && !leq(u[j], clf.interior_of(i))) return false;
  }
  return true;
}

}  // namespace fuzzytop
