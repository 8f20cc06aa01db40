use clap::Args;
use dirac_core::rootsys::{build_root_system, Family};
use dirac_core::symspace::{find_entry, pair_from_hermitian_node, pair_from_marked_node, SymmetricPair};

use crate::CliError;

/// Which space to compute: a catalog name, a family with `m`, or a root
/// system with a marked node.
#[derive(Debug, Clone, Default, Args)]
pub struct SpaceArgs {
    /// Catalog key or name (HP, Gr2, Gr4, G2, F4, E6, E7, E8)
    #[arg(long, conflicts_with = "family")]
    pub space: Option<String>,
    /// HP, Gr2, Gr4, or a root system (A..D with --rank, G2, F4, E6, E7, E8)
    #[arg(long)]
    pub family: Option<String>,
    /// Parameter of the HP, Gr2, Gr4 families
    #[arg(long)]
    pub m: Option<usize>,
    /// Rank for the classical root systems A, B, C, D
    #[arg(long)]
    pub rank: Option<usize>,
    /// Dynkin node (1-based) whose highest-root coefficient is 2 (or 1 in type A)
    #[arg(long)]
    pub node: Option<usize>,
}

pub fn select_pair(args: &SpaceArgs, formal: bool) -> Result<SymmetricPair, CliError> {
    if let Some(node) = args.node {
        let name = args
            .family
            .as_deref()
            .ok_or_else(|| CliError::Usage("--node needs --family".into()))?;
        if args.m.is_some() {
            return Err(CliError::Usage("--m does not apply with --node".into()));
        }
        let spec = match args.rank {
            Some(r) => format!("{name}{r}"),
            None => name.to_string(),
        };
        let family = Family::parse(&spec)?;
        return marked(family, node);
    }
    if args.rank.is_some() {
        return Err(CliError::Usage("--rank only applies with --node".into()));
    }
    let name = args
        .space
        .as_deref()
        .or(args.family.as_deref())
        .ok_or_else(|| CliError::Usage("give --space, or --family with --m or --node".into()))?;
    let entry = find_entry(name).ok_or_else(|| CliError::UnknownSpace(name.to_string()))?;
    if !entry.is_parameterized() && args.m.is_some() {
        return Err(CliError::Usage(format!("{} takes no --m", entry.key)));
    }
    Ok(entry.build(args.m, formal)?)
}

fn marked(family: Family, node: usize) -> Result<SymmetricPair, CliError> {
    let rs = build_root_system(family)?;
    if node == 0 || node > rs.rank() {
        return Err(CliError::Usage(format!(
            "--node must lie in 1..={} for {family}",
            rs.rank()
        )));
    }
    let idx = node - 1;
    match rs.highest_root_marks()[idx] {
        1 => Ok(pair_from_hermitian_node(&rs, idx)?),
        2 => Ok(pair_from_marked_node(&rs, idx)?),
        c => Err(CliError::Usage(format!(
            "node {node} of {family} has highest-root coefficient {c}; a symmetric pair needs 1 or 2"
        ))),
    }
}
