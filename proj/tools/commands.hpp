#pragma once

#include <optional>
#include <string>

namespace fdb::cli {

struct CountOptions {
  unsigned n = 0;
  std::string mode;
  std::optional<std::string> f_spec;
  std::optional<std::string> g_spec;
};

struct EnumerateOptions {
  unsigned n = 0;
  std::string kind;
};

struct ComposeOptions {
  std::string g_series;
  std::string f_series;
  std::optional<unsigned> precision;
};

struct DerivativeOptions {
  unsigned n = 0;
  std::string f_derivs;
  std::string g_derivs;
};

struct VerifyOptions {
  unsigned max_n = 10;
  unsigned trials = 50;
  std::uint64_t seed = 0;
};

int run_count(const CountOptions& options);
int run_enumerate(const EnumerateOptions& options);
int run_compose(const ComposeOptions& options);
int run_derivative(const DerivativeOptions& options);
int run_fdb_terms(unsigned n);
int run_verify(const VerifyOptions& options);

}  // namespace fdb::cli
