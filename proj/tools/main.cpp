#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "namescan/errors.hpp"

namespace {

// Exit codes: 0 success, 2 usage or configuration problem, 3 malformed
// input data, 4 file I/O failure, 1 unexpected internal error.
constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kUsage = 2;
constexpr int kBadData = 3;
constexpr int kIo = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tests name rosters for unexplainable scarcity of distinct "
               "names and provides the supporting analysis toolkit"};
  app.set_version_flag("--version", "1.0.0");
  app.require_subcommand(1);

  namescan::cli::register_analyze(app);
  namescan::cli::register_simulate(app);
  namescan::cli::register_diagnose(app);
  namescan::cli::register_qvalues(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const namescan::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadData;
  } catch (const namescan::CsvParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadData;
  } catch (const namescan::EmptyAfterNormalization& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadData;
  } catch (const namescan::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const namescan::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
