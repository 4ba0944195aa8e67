//! Command-line wrapper around the core crate: flag parsing, exact JSON
//! rendering, and the worked-example replay. All actual mathematics
//! lives in `theta_forge_core`.

pub mod args;
pub mod commands;
pub mod reference;
pub mod render;

pub use args::{Cli, Command, OutputMode};
pub use commands::{run, CliReport};

/// Cap worker parallelism via THETA_FORGE_THREADS. A second call (or a
/// pool already built elsewhere) is a silent no-op.
pub fn init_threads_from_env() {
    if let Ok(raw) = std::env::var("THETA_FORGE_THREADS") {
        if let Ok(n) = raw.trim().parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}
