// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#include <orbitcalc/parallel.hpp>

#include <algorithm>
#include <cstdlib>
#include <exception>

#ifdef ORBITCALC_HAVE_OPENMP
#include <omp.h>
#endif

namespace orbitcalc {

namespace {

std::optional<std::string> run_one (const IndexedCheck &check, std::size_t i)
{
  try
  {
    return check(i);
  }
  catch (const std::exception &e)
  {
    return std::string("exception: ") + e.what();
  }
}

} // namespace

int thread_count ()
{
#ifdef ORBITCALC_HAVE_OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char *env = std::getenv("ORBITCALC_THREADS"))
  {
    char *end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1)
      n = std::min(n, static_cast<int>(cap));
  }
  return std::max(n, 1);
}

std::vector<CheckFailure> check_all_serial (std::size_t n, const IndexedCheck &check)
{
  std::vector<CheckFailure> out;
  for (std::size_t i = 0; i < n; ++i)
    if (auto msg = run_one(check, i))
      out.push_back({i, std::move(*msg)});
  return out;
}

std::vector<CheckFailure> check_all_parallel (std::size_t n, const IndexedCheck &check)
{
#ifdef ORBITCALC_HAVE_OPENMP
  int threads = thread_count();
  if (threads <= 1 || n < 2)
    return check_all_serial(n, check);
  std::vector<std::vector<CheckFailure>> local(static_cast<std::size_t>(threads));
  long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long long i = 0; i < count; ++i)
  {
    auto idx = static_cast<std::size_t>(i);
    if (auto msg = run_one(check, idx))
      local[static_cast<std::size_t>(omp_get_thread_num())].push_back({idx, std::move(*msg)});
  }
  std::vector<CheckFailure> out;
  for (auto &v: local)
    out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  std::sort(out.begin(), out.end(),
            [](const CheckFailure &a, const CheckFailure &b) { return a.index < b.index; });
  return out;
#else
  return check_all_serial(n, check);
#endif
}

std::vector<CheckFailure> check_all (std::size_t n, const IndexedCheck &check,
                                     bool parallel)
{
  return parallel ? check_all_parallel(n, check) : check_all_serial(n, check);
}

} // namespace orbitcalc
