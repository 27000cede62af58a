#include "scheme_name.hpp"

#include <charconv>
#include <string>

namespace polyeval::cli {
namespace {

std::optional<FunctionScheme> builtin_from_name(std::string_view name) {
  if (name == "direct") return builtin_scheme(BuiltinScheme::direct);
  if (name == "horner") return builtin_scheme(BuiltinScheme::horner);
  if (name == "estrin") return builtin_scheme(BuiltinScheme::estrin);
  if (name == "balanced") return builtin_scheme(BuiltinScheme::balanced);
  return std::nullopt;
}

}  // namespace

std::optional<FunctionScheme> scheme_from_name(std::string_view name) {
  const std::size_t colon = name.find(':');
  if (colon == std::string_view::npos) return builtin_from_name(name);

  const std::size_t at = name.find('@', colon + 1);
  if (at == std::string_view::npos) return std::nullopt;
  auto upper = builtin_from_name(name.substr(0, colon));
  auto lower = builtin_from_name(name.substr(colon + 1, at - colon - 1));
  if (!upper || !lower) return std::nullopt;

  const std::string_view cutoff_text = name.substr(at + 1);
  std::uint64_t cutoff = 0;
  const auto result = std::from_chars(
      cutoff_text.data(), cutoff_text.data() + cutoff_text.size(), cutoff);
  if (result.ec != std::errc() ||
      result.ptr != cutoff_text.data() + cutoff_text.size() || cutoff < 1) {
    return std::nullopt;
  }
  return threshold_combine(std::move(*upper), std::move(*lower), cutoff);
}

}  // namespace polyeval::cli
