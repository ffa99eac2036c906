#include "ucalc/worldspace.hpp"

#include <algorithm>

namespace ucalc {

namespace {

constexpr std::size_t kMaxAtoms = 20;

struct SpaceAccess : WorldSpace {};

std::shared_ptr<WorldSpace> make_space() {
  return std::make_shared<SpaceAccess>();
}

}  // namespace

std::shared_ptr<const WorldSpace> WorldSpace::labeled(
    std::vector<std::string> ids) {
  if (ids.empty()) throw VocabularyError("world space must be nonempty");
  auto space = make_space();
  space->ids_ = std::move(ids);
  for (std::size_t i = 0; i < space->ids_.size(); ++i) {
    if (!space->index_.emplace(space->ids_[i], i).second)
      throw VocabularyError("duplicate world id '" + space->ids_[i] + "'");
  }
  return space;
}

std::shared_ptr<const WorldSpace> WorldSpace::assignments(
    std::vector<std::string> atoms) {
  if (atoms.size() > kMaxAtoms)
    throw VocabularyError("at most " + std::to_string(kMaxAtoms) +
                          " atoms are supported");
  auto space = make_space();
  space->assignment_ = true;
  space->atoms_ = std::move(atoms);
  const std::size_t n = space->atoms_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!space->atom_index_.emplace(space->atoms_[i], i).second)
      throw VocabularyError("duplicate atom '" + space->atoms_[i] + "'");
  }
  const std::size_t worlds = std::size_t{1} << n;
  space->ids_.reserve(worlds);
  for (std::size_t w = 0; w < worlds; ++w) {
    std::string id;
    for (std::size_t a = 0; a < n; ++a) {
      const bool truth = (w >> (n - 1 - a)) & 1;
      if (!truth) id += '!';
      id += space->atoms_[a];
    }
    if (id.empty()) id = "-";  // the empty assignment
    space->ids_.push_back(std::move(id));
  }
  for (std::size_t i = 0; i < space->ids_.size(); ++i)
    space->index_.emplace(space->ids_[i], i);
  return space;
}

std::optional<std::size_t> WorldSpace::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> WorldSpace::atom_index(
    std::string_view name) const {
  auto it = atom_index_.find(name);
  if (it == atom_index_.end()) return std::nullopt;
  return it->second;
}

bool WorldSpace::atom_true_in(std::size_t world, std::size_t atom) const {
  if (!assignment_)
    throw VocabularyError("space has no atom vocabulary");
  const std::size_t n = atoms_.size();
  return (world >> (n - 1 - atom)) & 1;
}

Event WorldSpace::empty_event() const {
  return Event(shared_from_this(), std::vector<bool>(size(), false));
}

Event WorldSpace::full_event() const {
  return Event(shared_from_this(), std::vector<bool>(size(), true));
}

Event::Event(std::shared_ptr<const WorldSpace> space,
             std::vector<bool> members)
    : space_(std::move(space)), members_(std::move(members)) {
  if (!space_ || members_.size() != space_->size())
    throw SpaceMismatchError("event membership does not match its space");
}

Event Event::none(std::shared_ptr<const WorldSpace> space) {
  std::vector<bool> bits(space->size(), false);
  return Event(std::move(space), std::move(bits));
}

Event Event::all(std::shared_ptr<const WorldSpace> space) {
  std::vector<bool> bits(space->size(), true);
  return Event(std::move(space), std::move(bits));
}

Event Event::of(std::shared_ptr<const WorldSpace> space,
                std::initializer_list<std::size_t> worlds) {
  std::vector<bool> bits(space->size(), false);
  for (std::size_t w : worlds) bits.at(w) = true;
  return Event(std::move(space), std::move(bits));
}

std::size_t Event::count() const {
  return static_cast<std::size_t>(
      std::count(members_.begin(), members_.end(), true));
}

bool Event::empty() const {
  return std::none_of(members_.begin(), members_.end(),
                      [](bool b) { return b; });
}

bool Event::full() const {
  return std::all_of(members_.begin(), members_.end(),
                     [](bool b) { return b; });
}

Event Event::complement() const {
  std::vector<bool> bits(members_);
  bits.flip();
  return Event(space_, std::move(bits));
}

Event Event::intersect(const Event& other) const {
  require_same_space(*this, other);
  std::vector<bool> bits(members_.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    bits[i] = members_[i] && other.members_[i];
  return Event(space_, std::move(bits));
}

Event Event::unite(const Event& other) const {
  require_same_space(*this, other);
  std::vector<bool> bits(members_.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    bits[i] = members_[i] || other.members_[i];
  return Event(space_, std::move(bits));
}

bool Event::subset_of(const Event& other) const {
  require_same_space(*this, other);
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i] && !other.members_[i]) return false;
  return true;
}

std::vector<std::size_t> Event::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i]) out.push_back(i);
  return out;
}

bool Event::same_space(const Event& a, const Event& b) {
  return a.space_ == b.space_ || *a.space_ == *b.space_;
}

void Event::require_same_space(const Event& a, const Event& b) {
  if (!same_space(a, b))
    throw SpaceMismatchError("events range over different world spaces");
}

}  // namespace ucalc
