"""
Refutations Panel Component for Streamlit UI
Lists refuting instances and archived construction certificates
"""
import streamlit as st

from streamlit_ui.config import StreamlitConfig


def _render_entries(entries, empty_message):
    if not entries:
        st.success(empty_message)
        return
    limit = StreamlitConfig.MAX_REFUTATIONS_SHOWN
    for entry in entries[:limit]:
        title = f"{entry['claim']}  {entry['instance']}  (t={entry.get('t')})"
        with st.expander(title, expanded=False):
            if entry.get("note"):
                st.write(entry["note"])
            st.json(entry.get("evidence", {}))
    if len(entries) > limit:
        st.caption(f"{len(entries) - limit} more entries in the JSON file")


def render_refutations_panel(report):
    """Render refutations first, then certificates of failed constructions"""
    st.markdown('<div class="panel-header">Refutations</div>', unsafe_allow_html=True)
    _render_entries(report.get("refutations", []), "No claim was refuted.")

    st.markdown('<div class="panel-header">Construction certificates</div>', unsafe_allow_html=True)
    _render_entries(report.get("certificates", []), "Every construction succeeded.")
