use std::fmt;

use crate::error::{Error, Result};
use crate::format::{parse_matrix, parse_script};
use crate::kernel::null_space_basis;

use super::WitnessCertificate;

const SECTIONS: [&str; 6] = ["[input]", "[nilpotent]", "[index]", "[nullity]", "[rref]", "[script]"];

impl fmt::Display for WitnessCertificate {
    /// The labelled text report: input, N, index, nullity, common RREF and
    /// the M→N script, in that order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[input]")?;
        write!(f, "{}", self.input)?;
        writeln!(f, "[nilpotent]")?;
        write!(f, "{}", self.nilpotent)?;
        writeln!(f, "[index]\n{}", self.index)?;
        writeln!(f, "[nullity]\n{}", self.nullity)?;
        writeln!(f, "[rref]")?;
        write!(f, "{}", self.rref_common)?;
        writeln!(f, "[script]")?;
        write!(f, "{}", self.script_m_to_n)
    }
}

/// Reads a certificate report back and re-verifies it. The kernel basis is
/// recomputed from the input.
pub fn parse_report(text: &str) -> Result<WitnessCertificate> {
    let mut bodies: Vec<(usize, String)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.starts_with('[') {
            let expected = SECTIONS.get(bodies.len()).copied();
            if Some(trimmed) != expected {
                return Err(Error::parse(
                    i + 1,
                    format!("expected section {}, got `{trimmed}`", expected.unwrap_or("<end>")),
                ));
            }
            bodies.push((i + 1, String::new()));
        } else if let Some((_, body)) = bodies.last_mut() {
            body.push_str(line);
            body.push('\n');
        } else if !trimmed.is_empty() && !trimmed.starts_with('#') {
            return Err(Error::parse(i + 1, "content before [input]"));
        }
    }
    if bodies.len() != SECTIONS.len() {
        return Err(Error::parse(
            text.lines().count(),
            format!("missing section {}", SECTIONS[bodies.len()]),
        ));
    }
    // Section bodies are parsed on their own, so shift line numbers back to
    // the position in the whole report.
    let at = |(start, _): &(usize, String), e: Error| match e {
        Error::Parse { line, message } => Error::parse(start + line, message),
        other => other,
    };
    let number = |section: &(usize, String)| -> Result<usize> {
        let mut words = section.1.split_whitespace();
        match (words.next().map(str::parse::<usize>), words.next()) {
            (Some(Ok(v)), None) => Ok(v),
            _ => Err(Error::parse(section.0, "expected a single non-negative integer")),
        }
    };

    let input = parse_matrix(&bodies[0].1).map_err(|e| at(&bodies[0], e))?;
    let nilpotent = parse_matrix(&bodies[1].1).map_err(|e| at(&bodies[1], e))?;
    let index = number(&bodies[2])?;
    let nullity = number(&bodies[3])?;
    let rref_common = parse_matrix(&bodies[4].1).map_err(|e| at(&bodies[4], e))?;
    let script_m_to_n = parse_script(&bodies[5].1, input.field()).map_err(|e| at(&bodies[5], e))?;

    let cert = WitnessCertificate {
        kernel: null_space_basis(&input),
        input,
        nilpotent,
        index,
        nullity,
        rref_common,
        script_m_to_n,
    };
    cert.verify()?;
    Ok(cert)
}
