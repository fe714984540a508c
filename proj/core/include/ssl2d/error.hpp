#ifndef SSL2D_ERROR_HPP
#define SSL2D_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ssl2d {

// Error categories surfaced by the CLI as machine-parsable codes.
enum class Errc {
  config,
  usage,
  io,
  data,
  audio,
  shape,
  checkpoint,
  infeasible,
  internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::config: return "config";
    case Errc::usage: return "usage";
    case Errc::io: return "io";
    case Errc::data: return "data";
    case Errc::audio: return "audio";
    case Errc::shape: return "shape";
    case Errc::checkpoint: return "checkpoint";
    case Errc::infeasible: return "infeasible";
    case Errc::internal: return "internal";
  }
  return "internal";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace ssl2d

#endif  // SSL2D_ERROR_HPP
