#include "levelplan/pair_space.hpp"

#include <charconv>
#include <stdexcept>

namespace levelplan {

std::string format_pair(const PairName& name) {
  return std::to_string(name.level) + ":" + name.first + "<" + name.second;
}

PairName parse_pair(std::string_view text) {
  const auto colon = text.find(':');
  const auto less = text.find('<');
  if (colon == std::string_view::npos || less == std::string_view::npos || less < colon) {
    throw std::invalid_argument("malformed pair '" + std::string(text) + "'");
  }
  PairName name;
  const auto level = text.substr(0, colon);
  const auto [ptr, ec] = std::from_chars(level.data(), level.data() + level.size(), name.level);
  if (ec != std::errc() || ptr != level.data() + level.size()) {
    throw std::invalid_argument("malformed level in pair '" + std::string(text) + "'");
  }
  name.first = std::string(text.substr(colon + 1, less - colon - 1));
  name.second = std::string(text.substr(less + 1));
  if (!is_valid_id(name.first) || !is_valid_id(name.second)) {
    throw std::invalid_argument("malformed vertex id in pair '" + std::string(text) + "'");
  }
  return name;
}

PairSpace::PairSpace(std::shared_ptr<const GraphIndex> index) : index_(std::move(index)) {
  for (int s = 0; s < static_cast<int>(index_->levels().size()); ++s) {
    offset_.push_back(static_cast<int>(pairs_.size()));
    const auto& members = index_->members(s);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        pairs_.push_back({s, members[i], members[j]});
      }
    }
  }
}

PairId PairSpace::id_of(int a, int b) const {
  if (a > b) {
    std::swap(a, b);
  }
  const int slot = index_->slot(a);
  const int w = static_cast<int>(index_->members(slot).size());
  const int p = index_->rank(a);
  const int q = index_->rank(b);
  return offset_[slot] + p * (2 * w - p - 1) / 2 + (q - p - 1);
}

std::optional<std::pair<PairId, bool>> PairSpace::resolve(const PairName& name) const {
  const auto a = index_->find(name.first);
  const auto b = index_->find(name.second);
  if (!a || !b || *a == *b || index_->level(*a) != name.level || index_->level(*b) != name.level) {
    return std::nullopt;
  }
  return std::make_pair(id_of(*a, *b), is_forward(*a, *b));
}

PairName PairSpace::name(PairId p, bool forward) const {
  const auto& vp = pairs_[p];
  const auto& a = index_->id(vp.first);
  const auto& b = index_->id(vp.second);
  return forward ? PairName{index_->levels()[vp.slot], a, b} : PairName{index_->levels()[vp.slot], b, a};
}

}  // namespace levelplan
