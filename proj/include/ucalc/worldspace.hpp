#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ucalc/error.hpp"

namespace ucalc {

class Event;

/// Finite, ordered set of possible worlds.  Worlds are opaque labels, or
/// truth assignments when the space was built from an atom vocabulary.
/// Spaces are immutable and shared by the events and measures over them.
class WorldSpace : public std::enable_shared_from_this<WorldSpace> {
 public:
  /// Space of opaque world labels, in the given order.
  static std::shared_ptr<const WorldSpace> labeled(
      std::vector<std::string> ids);

  /// Space of all 2^n truth assignments over the atoms, in binary
  /// counting order (first atom = most significant bit).  Ids list the
  /// true atoms and prefix false atoms with '!'; the empty assignment
  /// is rendered "-".  At most 20 atoms.
  static std::shared_ptr<const WorldSpace> assignments(
      std::vector<std::string> atoms);

  std::size_t size() const { return ids_.size(); }
  const std::string& id(std::size_t world) const { return ids_[world]; }
  const std::vector<std::string>& ids() const { return ids_; }

  std::optional<std::size_t> index_of(std::string_view id) const;

  bool is_assignment_space() const { return !atoms_.empty() || assignment_; }
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::optional<std::size_t> atom_index(std::string_view name) const;

  /// Truth of the atom in the world; assignment spaces only.
  bool atom_true_in(std::size_t world, std::size_t atom) const;

  Event empty_event() const;
  Event full_event() const;

  friend bool operator==(const WorldSpace& a, const WorldSpace& b) {
    return a.ids_ == b.ids_ && a.atoms_ == b.atoms_;
  }

 protected:
  WorldSpace() = default;

 private:
  std::vector<std::string> ids_;
  std::vector<std::string> atoms_;
  bool assignment_ = false;
  std::unordered_map<std::string_view, std::size_t> index_;
  std::unordered_map<std::string_view, std::size_t> atom_index_;
};

/// Subset of a world space with the usual boolean operations.
class Event {
 public:
  Event(std::shared_ptr<const WorldSpace> space, std::vector<bool> members);

  static Event none(std::shared_ptr<const WorldSpace> space);
  static Event all(std::shared_ptr<const WorldSpace> space);

  /// Event containing exactly the given world indices.
  static Event of(std::shared_ptr<const WorldSpace> space,
                  std::initializer_list<std::size_t> worlds);

  const std::shared_ptr<const WorldSpace>& space() const { return space_; }
  std::size_t space_size() const { return members_.size(); }

  bool contains(std::size_t world) const { return members_[world]; }
  std::size_t count() const;
  bool empty() const;
  bool full() const;

  Event complement() const;
  Event intersect(const Event& other) const;
  Event unite(const Event& other) const;
  bool subset_of(const Event& other) const;

  /// Indices of member worlds, ascending.
  std::vector<std::size_t> members() const;

  friend bool operator==(const Event& a, const Event& b) {
    return a.members_ == b.members_ && same_space(a, b);
  }

 private:
  static bool same_space(const Event& a, const Event& b);
  static void require_same_space(const Event& a, const Event& b);

  std::shared_ptr<const WorldSpace> space_;
  std::vector<bool> members_;
};

}  // namespace ucalc
