//! Instance files, reports, the result cache and the command pipelines.

mod cache;
mod canonical;
mod instance;
mod pipeline;
mod render;

pub use cache::{Cache, CacheStats, EnumerationRecord, ModuleRecord, CACHE_DIR_ENV, SPOT_CHECK_RATE};
pub use canonical::{canonical_value, sha256_hex, to_canonical_json};
pub use instance::{
    parse_instance, ArrowSpec, CorpusSpec, FieldSpec, Instance, InstanceFile, QuiverSpec, TermSpec, INSTANCE_SCHEMA,
};
pub use pipeline::{ambient, run, Command, Outcome, RunOptions, SubcategoryChoice, REPORT_SCHEMA};
pub use render::render_text;

#[cfg(test)]
mod tests;
