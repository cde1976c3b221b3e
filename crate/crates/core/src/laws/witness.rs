//! Counterexamples rendered in the text grammar.

use super::library::LibraryModel;
use super::model::Model;
use super::{Instance, Law, Slot, Tables};
use crate::point::FpSoftPoint;
use crate::text::{format_grade, Cover, Document};
use crate::Rational;

const SET_NAMES: [&str; 3] = ["A", "B", "C"];
const TARGET_NAMES: [&str; 2] = ["G", "H"];

/// `e1:1/2:{x1 x3}`, the point syntax the CLI accepts.
pub fn format_point(point: &FpSoftPoint<Rational>) -> String {
    let ctx = point.context();
    format!(
        "{}:{}:{{{}}}",
        ctx.parameters()[point.parameter()],
        format_grade(point.alpha()),
        ctx.element_names(point.crisp()).join(" ")
    )
}

pub(super) fn render(law: &Law, m: &LibraryModel, instance: &Instance, tables: &Tables) -> String {
    let (source, target) = (instance.source, instance.target);
    let mut doc = Document::new(m.context(source).clone());
    let mut notes = vec![format!("# {}: {}", law.id, law.statement)];
    let space = instance.map.as_ref().map(|spec| {
        doc.mappings
            .insert("m".to_string(), m.mapping(source, target, &spec.u, &spec.p));
        "m".to_string()
    });
    let (mut sets, mut targets, mut points) = (0, 0, 0);
    let mut source_top: Option<Vec<String>> = None;
    for (slot, &v) in law.domain.slots.iter().zip(&instance.values) {
        match *slot {
            Slot::Set => {
                doc.insert_set(SET_NAMES[sets.min(2)], m.set(source, v).clone(), None);
                sets += 1;
            }
            Slot::TargetSet => {
                doc.insert_set(TARGET_NAMES[targets.min(1)], m.set(target, v).clone(), space.clone());
                targets += 1;
            }
            Slot::Family(max) | Slot::TargetFamily(max) => {
                let on_target = matches!(slot, Slot::TargetFamily(_));
                let shape = if on_target { target } else { source };
                let (stem, set_space) = if on_target { ("G", space.clone()) } else { ("F", None) };
                let members = tables.families[&(shape, max)][v]
                    .iter()
                    .enumerate()
                    .map(|(k, &i)| {
                        doc.insert_set(&format!("{stem}{}", k + 1), m.set(shape, i).clone(), set_space.clone())
                    })
                    .collect();
                let name = if on_target { "target_family" } else { "family" };
                doc.covers.insert(name.to_string(), Cover { of: None, members });
            }
            Slot::Point => {
                let label = if points == 0 {
                    "point".to_string()
                } else {
                    format!("point{}", points + 1)
                };
                notes.push(format!("# {label}: {}", format_point(m.point(source, v))));
                points += 1;
            }
            Slot::Top => {
                let members: Vec<String> = m
                    .opens(m.top(source, v))
                    .into_iter()
                    .enumerate()
                    .map(|(k, s)| doc.insert_set(&format!("U{}", k + 1), s, None))
                    .collect();
                doc.topologies.insert("tau".to_string(), members.clone());
                source_top = Some(members);
            }
            Slot::TargetTop => {
                let members = m
                    .opens(m.top(target, v))
                    .into_iter()
                    .enumerate()
                    .map(|(k, s)| doc.insert_set(&format!("V{}", k + 1), s, space.clone()))
                    .collect();
                doc.topologies.insert("sigma".to_string(), members);
            }
            Slot::Base => {
                let opens = source_top.as_deref().unwrap_or_default();
                let picked: Vec<&str> = opens
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| v >> b & 1 == 1)
                    .map(|(_, n)| n.as_str())
                    .collect();
                notes.push(format!("# base: {{{}}}", picked.join(" ")));
            }
        }
    }
    let mut out = notes.join("\n");
    out.push('\n');
    out.push_str(&doc.print());
    out
}
