// Times the serial reference path of run_campaign against the OpenMP path on
// the same configuration and confirms the two report streams stay
// byte-identical.

#include <chrono>
#include <cstdio>

#include "apostol/campaign.hpp"
#include "apostol/render.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

int main() {
  using namespace apostol;
  using clock = std::chrono::steady_clock;

  CampaignConfig config;
  config.seed = 42;
  config.instances_per_identity = 60;
  config.max_n = 14;
  config.order = 64;
  config.identities = {"all"};

  const auto t0 = clock::now();
  const CampaignResult serial = run_campaign(config, RunMode::Serial);
  const auto t1 = clock::now();
  const CampaignResult parallel = run_campaign(config, RunMode::Parallel);
  const auto t2 = clock::now();

  const double serial_s = std::chrono::duration<double>(t1 - t0).count();
  const double parallel_s = std::chrono::duration<double>(t2 - t1).count();

  const std::string a = render_reports(serial.reports, OutputFormat::Json);
  const std::string b = render_reports(parallel.reports, OutputFormat::Json);

  int threads = 1;
#if defined(_OPENMP)
  threads = omp_get_max_threads();
#endif

  std::printf("campaign: %zu reports (%d identities x %d sampled instances + edge cases)\n",
              serial.reports.size(), static_cast<int>(identity_catalog().size()),
              config.instances_per_identity);
  std::printf("serial reference: %.3f s\n", serial_s);
  std::printf("openmp (%d threads): %.3f s\n", threads, parallel_s);
  std::printf("speedup: %.2fx\n", parallel_s > 0 ? serial_s / parallel_s : 0.0);
  std::printf("report streams identical: %s\n", a == b ? "yes" : "NO");
  return a == b ? 0 : 1;
}
