//! Instance files, output formats, random generation and campaigns.

pub mod campaign;
pub mod generate;
pub mod instance;
pub mod outcome;

pub use campaign::{replay_config, run_campaign, CampaignConfig, CampaignReport, InstanceRecord};
pub use generate::{generate_graph, plant_demands, PlantSpec, PlantVariant, Weaken};
pub use instance::{parse_instance, read_instance, serialize_instance, Instance};
pub use outcome::{serialize_outcome, serialize_report, Format};
