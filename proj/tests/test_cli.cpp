// Runs the built penv binary and checks exit codes.

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PENV_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = std::string(PENV_TMP_DIR) + "/" + name;
  std::ofstream(path, std::ios::binary) << body;
  return path;
}

const std::string kExample = PENV_DATA_DIR "/example48.json";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("all commands pass on the example") {
  for (const char* cmd : {"validate", "globalize", "orbits", "selector", "report"})
    CHECK_MESSAGE(run(std::string(cmd) + " " + kExample).code == 0, cmd);
}

TEST_CASE("vaught prints the transform") {
  const Run r = run("vaught " + kExample + " --set v --open-g all --kind delta");
  CHECK(r.code == 0);
  CHECK(r.out.find("{v}") != std::string::npos);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate " + kExample).code == 2);
  CHECK(run("validate " + kExample + " --format yaml").code == 2);
  CHECK(run("validate /nonexistent/file.json").code == 2);
  CHECK(run("vaught " + kExample + " --set nowhere").code == 2);
  CHECK(run("validate " + write_temp("bad.json", "{\"group\": [")).code == 2);
  CHECK(run("validate " + write_temp("schema.json", "{}")).code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("dot output is written") {
  const std::string path = std::string(PENV_TMP_DIR) + "/out.dot";
  std::remove(path.c_str());
  CHECK(run("globalize " + kExample + " --dot " + path).code == 0);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first.find("digraph") != std::string::npos);
}

}
