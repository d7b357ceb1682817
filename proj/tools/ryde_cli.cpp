// ryde: rank-metric MPC-in-the-head signatures
// Copyright 2026 The ryde Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ryde/errors.hpp"
#include "ryde/estimator.hpp"
#include "ryde/params.hpp"
#include "ryde/sig_api.hpp"
#include "ryde/xof.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using Bytes = std::vector<std::uint8_t>;

namespace {

std::string to_hex(std::span<const std::uint8_t> data) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * data.size());
  for (std::uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

Bytes from_hex(std::string_view text) {
  Bytes out;
  int hi = -1;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    int v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'f')
      v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      v = c - 'A' + 10;
    else
      throw ryde::Error("invalid hex digit");
    if (hi < 0)
      hi = v;
    else {
      out.push_back(std::uint8_t(hi << 4 | v));
      hi = -1;
    }
  }
  if (hi >= 0) throw ryde::Error("odd number of hex digits");
  return out;
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ryde::Error("cannot open " + path);
  Bytes data((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  return data;
}

void write_file(const std::string& path, std::span<const std::uint8_t> data,
                bool hex) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ryde::Error("cannot write " + path);
  if (hex) {
    const std::string h = to_hex(data) + "\n";
    out.write(h.data(), std::streamsize(h.size()));
  } else {
    out.write(reinterpret_cast<const char*>(data.data()),
              std::streamsize(data.size()));
  }
  if (!out) throw ryde::Error("short write to " + path);
}

// Keys and signatures; messages are always read raw.
Bytes read_blob(const std::string& path, bool hex) {
  Bytes data = read_file(path);
  if (!hex) return data;
  return from_hex(std::string(data.begin(), data.end()));
}

// A --seed of exactly lambda bits is used as is, anything else is
// stretched (or compressed) through the set's XOF so short test seeds
// like "00" work everywhere.
Bytes expand_seed(const ryde::Params& p, const std::string& hex) {
  Bytes raw = from_hex(hex);
  if (raw.size() == p.seed_bytes()) return raw;
  ryde::Xof x(p.xof());
  x.absorb({raw.data(), raw.size()});
  x.finish();
  return x.squeeze_vec(p.seed_bytes());
}

Bytes os_seed(const ryde::Params& p) {
  std::random_device rd;
  Bytes seed(p.seed_bytes());
  for (auto& b : seed) b = std::uint8_t(rd());
  return seed;
}

const ryde::Params& params_of_key(const Bytes& key, const std::string& name) {
  if (!name.empty()) return ryde::params_by_name(name);
  if (key.size() < 2) throw ryde::Error("key file too short");
  return ryde::params_by_id(key[0], key[1]);
}

// --- kat ---------------------------------------------------------------
// Deterministic vectors: every seed and message is derived from the
// parameter-set name and the vector index, so kat-gen is reproducible
// bit for bit and kat-check needs no side data.

Bytes kat_stream(const ryde::Params& p, std::string_view label, unsigned index,
                 std::size_t n) {
  ryde::Xof x(p.xof());
  x.absorb_byte(0x4b);  // 'K', outside the protocol's domain range
  x.absorb({reinterpret_cast<const std::uint8_t*>(p.name.data()),
            p.name.size()});
  x.absorb_byte(0x00);
  x.absorb({reinterpret_cast<const std::uint8_t*>(label.data()),
            label.size()});
  x.absorb_u32be(index);
  x.finish();
  return x.squeeze_vec(n);
}

json kat_make(const ryde::Params& p, unsigned count) {
  json vectors = json::array();
  for (unsigned i = 0; i < count; i++) {
    const Bytes kseed = kat_stream(p, "key", i, p.seed_bytes());
    const Bytes sseed = kat_stream(p, "sign", i, p.seed_bytes());
    const Bytes msg = kat_stream(p, "msg", i, 33 + 7 * i);
    const auto kp = ryde::keypair_bytes(p, {kseed.data(), kseed.size()});
    const Bytes sig =
        ryde::sign_bytes(p, {kp.sk.data(), kp.sk.size()},
                         {msg.data(), msg.size()}, {sseed.data(), sseed.size()});
    vectors.push_back({{"count", i},
                       {"seed_key", to_hex(kseed)},
                       {"seed_sign", to_hex(sseed)},
                       {"msg", to_hex(msg)},
                       {"pk", to_hex(kp.pk)},
                       {"sk", to_hex(kp.sk)},
                       {"sig", to_hex(sig)}});
  }
  return json{{"set", p.name}, {"vectors", vectors}};
}

void kat_verify_file(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw ryde::Error("cannot open " + file.string());
  json doc = json::parse(in);
  const ryde::Params& p =
      ryde::params_by_name(doc.at("set").get<std::string>());
  unsigned n = 0;
  for (const auto& v : doc.at("vectors")) {
    const Bytes kseed = from_hex(v.at("seed_key").get<std::string>());
    const Bytes sseed = from_hex(v.at("seed_sign").get<std::string>());
    const Bytes msg = from_hex(v.at("msg").get<std::string>());
    const auto kp = ryde::keypair_bytes(p, {kseed.data(), kseed.size()});
    if (to_hex(kp.pk) != v.at("pk").get<std::string>() ||
        to_hex(kp.sk) != v.at("sk").get<std::string>())
      throw ryde::Error(p.name + " vector " + std::to_string(n) +
                        ": key mismatch");
    const Bytes sig =
        ryde::sign_bytes(p, {kp.sk.data(), kp.sk.size()},
                         {msg.data(), msg.size()}, {sseed.data(), sseed.size()});
    if (to_hex(sig) != v.at("sig").get<std::string>())
      throw ryde::Error(p.name + " vector " + std::to_string(n) +
                        ": signature mismatch");
    if (!ryde::verify_bytes(p, {kp.pk.data(), kp.pk.size()},
                            {msg.data(), msg.size()},
                            {sig.data(), sig.size()}))
      throw ryde::Error(p.name + " vector " + std::to_string(n) +
                        ": signature does not verify");
    n++;
  }
  std::cout << "kat " << doc.at("set").get<std::string>() << ": " << n
            << " vectors ok\n";
}

// --- estimate ----------------------------------------------------------

json estimate_set(const ryde::Params& p, double omega) {
  const auto c = ryde::code_of(p);
  const auto kz = ryde::kz_forge_cost(p);
  const auto mm = ryde::max_minors_cost(c, omega);
  const auto sm = ryde::support_minors_cost(c, omega);
  return json{
      {"set", p.name},
      {"level", p.level},
      {"q", p.q},
      {"m", p.m},
      {"n", p.n},
      {"k", p.k},
      {"r", p.r},
      {"N", p.N},
      {"eta", p.eta},
      {"tau", p.tau},
      {"ell", p.ell},
      {"lambda", p.lambda},
      {"estimate_only", p.estimator_only},
      {"pk_bytes", 2 + p.seed_bytes() + (p.n - p.k) * ((p.fqm_bits() + 7) / 8)},
      {"sig_bytes", ryde::signature_bound_bytes(p)},
      {"kz_log2", kz.log2_cost},
      {"kz_tau_prime", kz.tau_prime},
      {"soundness_log2", ryde::soundness_error_log2(p)},
      {"enumeration_log2", ryde::enumeration_cost(c)},
      {"error_support_log2", ryde::error_support_cost(c)},
      {"max_minors",
       {{"log2", mm.log2_cost}, {"a", mm.a}, {"p", mm.p},
        {"feasible", mm.feasible}}},
      {"support_minors",
       {{"log2", sm.log2_cost}, {"b", sm.b}, {"a", sm.a}, {"p", sm.p},
        {"feasible", sm.feasible}, {"degenerate", sm.degenerate}}},
      {"best_attack_log2", ryde::best_attack_cost(c, omega)}};
}

int do_estimate(const std::string& level, const std::string& format,
                const std::string& out_path, double omega) {
  std::vector<std::string> levels;
  if (level.empty())
    levels = {"I", "III", "V"};
  else
    levels = {level};

  std::ostringstream os;
  if (format == "text") {
    for (const auto& l : levels) os << ryde::table_report(l, omega) << "\n";
  } else {
    std::vector<unsigned> lvls;
    for (const auto& l : levels)
      lvls.push_back(l == "I" ? 1u : l == "III" ? 3u : 5u);
    json sets = json::array();
    for (const auto& p : ryde::all_params())
      if (std::find(lvls.begin(), lvls.end(), p.level) != lvls.end())
        sets.push_back(estimate_set(p, omega));
    if (format == "json") {
      os << json{{"omega", omega}, {"sets", sets}}.dump(2) << "\n";
    } else {  // csv
      os << "set,level,q,m,n,k,r,N,eta,tau,ell,lambda,pk_bytes,sig_bytes,"
            "kz_log2,kz_tau_prime,soundness_log2,enumeration_log2,"
            "error_support_log2,mm_log2,mm_a,mm_p,sm_log2,sm_b,sm_a,sm_p,"
            "sm_degenerate,best_attack_log2\n";
      for (const auto& s : sets)
        os << s["set"].get<std::string>() << "," << s["level"] << ","
           << s["q"] << "," << s["m"] << "," << s["n"] << "," << s["k"]
           << "," << s["r"] << "," << s["N"] << "," << s["eta"] << ","
           << s["tau"] << "," << s["ell"] << "," << s["lambda"] << ","
           << s["pk_bytes"] << "," << s["sig_bytes"] << "," << s["kz_log2"]
           << "," << s["kz_tau_prime"] << "," << s["soundness_log2"] << ","
           << s["enumeration_log2"] << "," << s["error_support_log2"] << ","
           << s["max_minors"]["log2"] << "," << s["max_minors"]["a"] << ","
           << s["max_minors"]["p"] << "," << s["support_minors"]["log2"]
           << "," << s["support_minors"]["b"] << ","
           << s["support_minors"]["a"] << "," << s["support_minors"]["p"]
           << "," << s["support_minors"]["degenerate"] << ","
           << s["best_attack_log2"] << "\n";
    }
  }
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw ryde::Error("cannot write " + out_path);
    out << os.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ryde: rank-metric MPC-in-the-head signatures"};
  app.require_subcommand(1);

  std::string params_name, seed_hex, in_path, out_path, sk_path, pk_path,
      sig_path, format = "bin";
  std::string level, est_format = "text";
  double omega = 2.0;
  unsigned count = 5, threads = std::thread::hardware_concurrency();

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "key/signature file encoding")
        ->check(CLI::IsMember({"bin", "hex"}))
        ->capture_default_str();
  };

  CLI::App* keygen = app.add_subcommand("keygen", "generate a key pair");
  keygen->add_option("--params", params_name, "parameter set name")
      ->required();
  keygen->add_option("--seed", seed_hex,
                     "hex seed (any length; default: OS entropy)");
  keygen->add_option("--out", out_path, "output stem; writes <out>.pk and <out>.sk")
      ->required();
  add_format(keygen);

  CLI::App* sign = app.add_subcommand("sign", "sign a message file");
  sign->add_option("--params", params_name,
                   "parameter set name (default: taken from the key)");
  sign->add_option("--sk", sk_path, "secret key file")->required();
  sign->add_option("--in", in_path, "message file")->required();
  sign->add_option("--out", out_path, "signature output file")->required();
  sign->add_option("--seed", seed_hex,
                   "hex seed for deterministic signing (default: OS entropy)");
  add_format(sign);

  CLI::App* verify = app.add_subcommand("verify", "verify a signature");
  verify->add_option("--params", params_name,
                     "parameter set name (default: taken from the key)");
  verify->add_option("--pk", pk_path, "public key file")->required();
  verify->add_option("--in", in_path, "message file")->required();
  verify->add_option("--sig", sig_path, "signature file")->required();
  add_format(verify);

  CLI::App* katgen = app.add_subcommand("kat-gen", "generate known-answer vectors");
  katgen->add_option("--params", params_name,
                     "one parameter set (default: all signable sets)");
  katgen->add_option("--out", out_path, "output directory")->required();
  katgen->add_option("--count", count, "vectors per set")
      ->capture_default_str();
  katgen->add_option("--threads", threads, "parameter sets processed in parallel")
      ->capture_default_str();

  CLI::App* katcheck =
      app.add_subcommand("kat-check", "check known-answer vectors");
  katcheck->add_option("--in", in_path, "directory of .json vector files")
      ->required();

  CLI::App* estimate =
      app.add_subcommand("estimate", "security and size tables");
  estimate->add_option("--level", level, "NIST level (default: all)")
      ->check(CLI::IsMember({"I", "III", "V"}));
  estimate->add_option("--omega", omega, "linear algebra exponent")
      ->capture_default_str();
  estimate->add_option("--format", est_format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  estimate->add_option("--out", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool hex = format == "hex";
  try {
    if (app.got_subcommand(keygen)) {
      const ryde::Params& p = ryde::params_by_name(params_name);
      const Bytes seed =
          seed_hex.empty() ? os_seed(p) : expand_seed(p, seed_hex);
      const auto kp = ryde::keypair_bytes(p, {seed.data(), seed.size()});
      write_file(out_path + ".pk", {kp.pk.data(), kp.pk.size()}, hex);
      write_file(out_path + ".sk", {kp.sk.data(), kp.sk.size()}, hex);
      std::cout << "wrote " << out_path << ".pk (" << kp.pk.size()
                << " bytes), " << out_path << ".sk (" << kp.sk.size()
                << " bytes)\n";
      return 0;
    }

    if (app.got_subcommand(sign)) {
      const Bytes sk = read_blob(sk_path, hex);
      const ryde::Params& p = params_of_key(sk, params_name);
      const Bytes msg = read_file(in_path);
      const Bytes seed =
          seed_hex.empty() ? os_seed(p) : expand_seed(p, seed_hex);
      const Bytes sig =
          ryde::sign_bytes(p, {sk.data(), sk.size()}, {msg.data(), msg.size()},
                           {seed.data(), seed.size()});
      write_file(out_path, {sig.data(), sig.size()}, hex);
      std::cout << "wrote " << out_path << " (" << sig.size() << " bytes, "
                << p.name << ")\n";
      return 0;
    }

    if (app.got_subcommand(verify)) {
      const Bytes pk = read_blob(pk_path, hex);
      const ryde::Params& p = params_of_key(pk, params_name);
      const Bytes msg = read_file(in_path);
      const Bytes sig = read_blob(sig_path, hex);
      if (ryde::verify_bytes(p, {pk.data(), pk.size()},
                             {msg.data(), msg.size()},
                             {sig.data(), sig.size()})) {
        std::cout << "accept\n";
        return 0;
      }
      std::cout << "reject\n";
      return 1;
    }

    if (app.got_subcommand(katgen)) {
      fs::create_directories(out_path);
      std::vector<const ryde::Params*> sets;
      if (!params_name.empty()) {
        sets.push_back(&ryde::params_by_name(params_name));
        if (sets.back()->estimator_only)
          throw ryde::Error("parameter set is size-and-security estimate only");
      } else {
        for (const auto& p : ryde::all_params())
          if (!p.estimator_only) sets.push_back(&p);
      }
      std::mutex io;
      std::atomic<std::size_t> next{0};
      std::exception_ptr err;
      auto worker = [&] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < sets.size();) {
            const auto& p = *sets[i];
            const json doc = kat_make(p, count);
            const fs::path file = fs::path(out_path) / (p.name + ".json");
            std::ofstream out(file, std::ios::trunc);
            if (!out) throw ryde::Error("cannot write " + file.string());
            out << doc.dump(2) << "\n";
            const std::lock_guard<std::mutex> lock(io);
            std::cout << "wrote " << file.string() << " (" << count
                      << " vectors)\n";
          }
        } catch (...) {
          const std::lock_guard<std::mutex> lock(io);
          if (!err) err = std::current_exception();
          next.store(sets.size());  // stop the other workers
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < std::max(1u, threads) && t < sets.size(); t++)
        pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();
      if (err) std::rethrow_exception(err);
      return 0;
    }

    if (app.got_subcommand(katcheck)) {
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(in_path))
        if (e.path().extension() == ".json") files.push_back(e.path());
      if (files.empty())
        throw ryde::Error("no .json vector files in " + in_path);
      std::sort(files.begin(), files.end());
      for (const auto& f : files) kat_verify_file(f);
      return 0;
    }

    if (app.got_subcommand(estimate))
      return do_estimate(level, est_format, out_path, omega);
  } catch (const std::exception& e) {
    std::cerr << "ryde: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
