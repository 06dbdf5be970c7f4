use crate::error::Result;
use crate::output::emit;
use crate::source::GenArgs;
use crate::Cli;

#[derive(Debug, clap::Args)]
pub struct Args {
    #[command(flatten)]
    pub gen: GenArgs,
}

pub fn run(cli: &Cli, args: &Args) -> Result<()> {
    let spec = args.gen.to_spec(cli.seed)?;
    let g = spec.generate()?;
    let mut text = format!("# {}\n", spec.describe());
    text.push_str(&ksi_core::write_edge_list(&g));
    emit(cli.output.as_deref(), &text)
}
