#include "nakamoto/promises/promise.hpp"

namespace nakamoto::promises {

namespace {
template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;
}  // namespace

std::string body_kind(const Body& b) {
  return std::visit(overloaded{
                        [](const Transfer&) { return "transfer"; },
                        [](const ProvideService&) { return "provide-service"; },
                        [](const ServeInOrder&) { return "serve-in-order"; },
                        [](const AcceptsTransfers&) { return "accepts-transfers"; },
                        [](const SatisfiesCondition&) { return "satisfies-condition"; },
                        [](const Controls&) { return "controls"; },
                        [](const Policy&) { return "policy"; },
                        [](const Conditional&) { return "conditional"; },
                    },
                    b);
}

std::string to_string(Status s) {
  switch (s) {
    case Status::declared: return "declared";
    case Status::satisfied: return "satisfied";
    case Status::expectation_lapsed: return "expectation-lapsed";
  }
  return "unknown";
}

}  // namespace nakamoto::promises
